#include "hypotheses.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "errors.hpp"
#include "rng.hpp"

namespace quatrec {

namespace {

void require_field_base(const AlgebraPresentation& a, const char* what) {
  if (!a.base.is_field()) {
    throw InputError(std::string(what) + " requires a field base ring; lift integer presentations first");
  }
}

Element random_element(const AlgebraPresentation& a, Rng& rng, long long height) {
  Element e = a.zero();
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (a.base.kind == RingKind::PrimeField) {
      e.coords[i] = Scalar::of(a.base, static_cast<long long>(rng.uniform_below(
                                           static_cast<std::uint64_t>(a.base.p))));
    } else {
      e.coords[i] = Scalar::of(a.base, rng.uniform_int(-height, height));
    }
  }
  return e;
}

// Number of (x, y) pairs in a finite-base exhaustive scan, as a double to
// sidestep overflow in the guard comparison.
double finite_pair_count(const AlgebraPresentation& a) {
  double count = 1.0;
  for (std::size_t i = 0; i < 2 * a.dim; ++i) count *= static_cast<double>(a.base.p);
  return count;
}

std::vector<Element> all_elements(const AlgebraPresentation& a) {
  const std::int64_t p = a.base.p;
  std::vector<Element> out;
  std::vector<std::int64_t> odo(a.dim, 0);
  while (true) {
    Element e = a.zero();
    for (std::size_t i = 0; i < a.dim; ++i) e.coords[i] = Scalar::of(a.base, odo[i]);
    out.push_back(std::move(e));
    std::size_t pos = 0;
    while (pos < a.dim && ++odo[pos] == p) odo[pos++] = 0;
    if (pos == a.dim) break;
  }
  return out;
}

std::optional<CommutatorSquareWitness> square_violation(const AlgebraPresentation& a,
                                                        const Element& x, const Element& y) {
  Element v = commutator(a, x, y);
  if (v.is_zero()) return std::nullopt;
  Element v2 = multiply(a, v, v);
  for (std::size_t s = 0; s < a.dim; ++s) {
    if (!commutator(a, v2, a.basis(s)).is_zero()) {
      return CommutatorSquareWitness{x, y, v, v2, s};
    }
  }
  return std::nullopt;
}

std::optional<CommutatorZeroDivisorWitness> regular_violation(const AlgebraPresentation& a,
                                                              const Element& x, const Element& y) {
  Element v = commutator(a, x, y);
  if (v.is_zero()) return std::nullopt;
  if (auto zd = is_zero_divisor(a, v)) {
    return CommutatorZeroDivisorWitness{x, y, v, *zd};
  }
  return std::nullopt;
}

}  // namespace

std::vector<MultiPoly> commutator_square_polynomials(const AlgebraPresentation& a) {
  require_field_base(a, "the symbolic expansion");
  const std::size_t n = a.dim;
  const std::size_t nv = 2 * n;
  auto gamma = [&](std::size_t s, std::size_t t, std::size_t u) -> const Scalar& {
    return a.table[s][t].coords[u];
  };

  // Coordinates of v = (x, y) as bilinear polynomials in x_s, y_t.
  std::vector<MultiPoly> vpoly;
  vpoly.reserve(n);
  for (std::size_t u = 0; u < n; ++u) {
    MultiPoly pu(a.base, nv);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        Scalar c = gamma(s, t, u) - gamma(t, s, u);
        if (c.is_zero()) continue;
        MultiPoly::Exponents e(nv, 0);
        e[s] += 1;
        e[n + t] += 1;
        pu.add_term(e, c);
      }
    }
    vpoly.push_back(std::move(pu));
  }

  std::map<std::pair<std::size_t, std::size_t>, MultiPoly> products;
  auto product = [&](std::size_t u, std::size_t w) -> const MultiPoly& {
    std::pair<std::size_t, std::size_t> key = std::minmax(u, w);
    auto it = products.find(key);
    if (it == products.end())
      it = products.emplace(key, vpoly[key.first] * vpoly[key.second]).first;
    return it->second;
  };

  // Coordinates of v^2.
  std::vector<MultiPoly> square;
  square.reserve(n);
  for (std::size_t w = 0; w < n; ++w) {
    MultiPoly acc(a.base, nv);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t u2 = 0; u2 < n; ++u2) {
        const Scalar& c = gamma(u, u2, w);
        if (!c.is_zero()) acc.add_scaled(product(u, u2), c);
      }
    }
    square.push_back(std::move(acc));
  }

  // Coordinates of (v^2)e_s - e_s(v^2) for every basis index s.
  std::vector<MultiPoly> out;
  out.reserve(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t w2 = 0; w2 < n; ++w2) {
      MultiPoly d(a.base, nv);
      for (std::size_t w = 0; w < n; ++w) {
        Scalar c = gamma(w, s, w2) - gamma(s, w, w2);
        if (!c.is_zero()) d.add_scaled(square[w], c);
      }
      d.reduce_exponents_for_field();
      out.push_back(std::move(d));
    }
  }
  return out;
}

CentralSquaresVerdict check_commutator_squares_central(const AlgebraPresentation& a, CheckMode mode,
                                                       const SampleOptions& opts) {
  require_field_base(a, "the commutator-square check");
  CentralSquaresVerdict verdict;

  if (mode == CheckMode::Symbolic) {
    std::vector<MultiPoly> polys = commutator_square_polynomials(a);
    const MultiPoly* obstruction = nullptr;
    for (const auto& p : polys) {
      if (!p.is_zero()) {
        obstruction = &p;
        break;
      }
    }
    if (!obstruction) {
      verdict.kind = CentralSquaresVerdict::Kind::HoldsSymbolic;
      return verdict;
    }
    // The expansion is non-zero, so a violating pair exists; materialize one.
    const std::size_t n = a.dim;
    {
      const auto& [exps, coeff] = *obstruction->terms().begin();
      Element x = a.zero();
      Element y = a.zero();
      for (std::size_t i = 0; i < n; ++i) {
        if (exps[i] > 0) x.coords[i] = Scalar::of(a.base, 1);
        if (exps[n + i] > 0) y.coords[i] = Scalar::of(a.base, 1);
      }
      if (auto w = square_violation(a, x, y)) {
        verdict.kind = CentralSquaresVerdict::Kind::Fails;
        verdict.witness = std::move(w);
        return verdict;
      }
    }
    {
      Rng rng(opts.seed);
      const int tries = opts.samples > 64 ? opts.samples * 8 : 512;
      for (int t = 0; t < tries; ++t) {
        Element x = random_element(a, rng, opts.height);
        Element y = random_element(a, rng, opts.height);
        if (auto w = square_violation(a, x, y)) {
          verdict.kind = CentralSquaresVerdict::Kind::Fails;
          verdict.witness = std::move(w);
          return verdict;
        }
      }
    }
    if (a.base.kind == RingKind::PrimeField && finite_pair_count(a) <= 67108864.0) {
      std::vector<Element> elems = all_elements(a);
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i; j < elems.size(); ++j) {
          if (auto w = square_violation(a, elems[i], elems[j])) {
            verdict.kind = CentralSquaresVerdict::Kind::Fails;
            verdict.witness = std::move(w);
            return verdict;
          }
        }
      }
    }
    throw std::logic_error("non-zero commutator-square obstruction without a witness point");
  }

  if (mode == CheckMode::Exhaustive) {
    if (a.base.kind != RingKind::PrimeField)
      throw InputError("exhaustive mode requires a finite base field");
    if (finite_pair_count(a) > 67108864.0)
      throw InputError("exhaustive scan too large; use symbolic or randomized mode");
    std::vector<Element> elems = all_elements(a);
    std::size_t scanned = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = i; j < elems.size(); ++j) {
        ++scanned;
        if (auto w = square_violation(a, elems[i], elems[j])) {
          verdict.kind = CentralSquaresVerdict::Kind::Fails;
          verdict.witness = std::move(w);
          verdict.samples = scanned;
          return verdict;
        }
      }
    }
    verdict.kind = CentralSquaresVerdict::Kind::HoldsExhaustive;
    verdict.samples = scanned;
    return verdict;
  }

  // Randomized: deterministic basis-pair screen, then seeded sampling.
  for (std::size_t s = 0; s < a.dim; ++s) {
    for (std::size_t t = s + 1; t < a.dim; ++t) {
      if (auto w = square_violation(a, a.basis(s), a.basis(t))) {
        verdict.kind = CentralSquaresVerdict::Kind::Fails;
        verdict.witness = std::move(w);
        return verdict;
      }
    }
  }
  Rng rng(opts.seed);
  for (int t = 0; t < opts.samples; ++t) {
    Element x = random_element(a, rng, opts.height);
    Element y = random_element(a, rng, opts.height);
    if (auto w = square_violation(a, x, y)) {
      verdict.kind = CentralSquaresVerdict::Kind::Fails;
      verdict.witness = std::move(w);
      verdict.samples = static_cast<std::size_t>(t + 1);
      return verdict;
    }
  }
  verdict.kind = CentralSquaresVerdict::Kind::NoViolationSampled;
  verdict.samples = static_cast<std::size_t>(opts.samples);
  return verdict;
}

RegularCommutatorsVerdict check_commutators_regular(const AlgebraPresentation& a, CheckMode mode,
                                                    const SampleOptions& opts) {
  require_field_base(a, "the commutator-regularity check");
  RegularCommutatorsVerdict verdict;

  if (mode == CheckMode::Symbolic)
    throw InputError("the commutator-regularity check has no symbolic mode");

  if (mode == CheckMode::Exhaustive) {
    if (a.base.kind != RingKind::PrimeField)
      throw InputError("exhaustive mode requires a finite base field");
    if (finite_pair_count(a) > 67108864.0)
      throw InputError("exhaustive scan too large; use randomized mode");
    std::vector<Element> elems = all_elements(a);
    std::size_t scanned = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = i; j < elems.size(); ++j) {
        ++scanned;
        if (auto w = regular_violation(a, elems[i], elems[j])) {
          verdict.kind = RegularCommutatorsVerdict::Kind::Fails;
          verdict.witness = std::move(w);
          verdict.samples = scanned;
          return verdict;
        }
      }
    }
    verdict.kind = RegularCommutatorsVerdict::Kind::HoldsExhaustive;
    verdict.samples = scanned;
    return verdict;
  }

  // Randomized: the basis-pair screen catches structural zero divisors (for
  // example the matrix units of a full matrix algebra) that random sampling
  // over Q almost never lands on.
  for (std::size_t s = 0; s < a.dim; ++s) {
    for (std::size_t t = s + 1; t < a.dim; ++t) {
      if (auto w = regular_violation(a, a.basis(s), a.basis(t))) {
        verdict.kind = RegularCommutatorsVerdict::Kind::Fails;
        verdict.witness = std::move(w);
        return verdict;
      }
    }
  }
  Rng rng(opts.seed);
  for (int t = 0; t < opts.samples; ++t) {
    Element x = random_element(a, rng, opts.height);
    Element y = random_element(a, rng, opts.height);
    if (auto w = regular_violation(a, x, y)) {
      verdict.kind = RegularCommutatorsVerdict::Kind::Fails;
      verdict.witness = std::move(w);
      verdict.samples = static_cast<std::size_t>(t + 1);
      return verdict;
    }
  }
  verdict.kind = RegularCommutatorsVerdict::Kind::NoViolationSampled;
  verdict.samples = static_cast<std::size_t>(opts.samples);
  return verdict;
}

}  // namespace quatrec
