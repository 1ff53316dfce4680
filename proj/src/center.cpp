#include "center.hpp"

#include <stdexcept>

#include "errors.hpp"
#include "matrix.hpp"
#include "rng.hpp"
#include "unipoly.hpp"

namespace quatrec {

namespace {

ExactMatrix left_mult_matrix(const AlgebraPresentation& a, const Element& v) {
  std::vector<std::vector<Scalar>> raw;
  raw.reserve(a.dim);
  for (std::size_t t = 0; t < a.dim; ++t) raw.push_back(multiply(a, v, a.basis(t)).coords);
  return ExactMatrix::from_columns(a.base, a.dim, raw);
}

ExactMatrix right_mult_matrix(const AlgebraPresentation& a, const Element& v) {
  std::vector<std::vector<Scalar>> raw;
  raw.reserve(a.dim);
  for (std::size_t t = 0; t < a.dim; ++t) raw.push_back(multiply(a, a.basis(t), v).coords);
  return ExactMatrix::from_columns(a.base, a.dim, raw);
}

void verify_zero_divisor(const AlgebraPresentation& a, const ZeroDivisorWitness& w) {
  if (w.element.is_zero() || w.partner.is_zero())
    throw std::logic_error("zero-divisor witness has a zero factor");
  Element prod = w.left ? multiply(a, w.element, w.partner) : multiply(a, w.partner, w.element);
  if (!prod.is_zero()) throw std::logic_error("zero-divisor witness product does not vanish");
}

Element combine(const AlgebraPresentation& a, const std::vector<Element>& basis,
                const std::vector<Scalar>& coeffs) {
  Element out = a.zero();
  for (std::size_t i = 0; i < basis.size(); ++i) out = out + scale(coeffs[i], basis[i]);
  return out;
}

// Horner evaluation of a polynomial (coeffs[i] on t^i) at the element v.
Element eval_poly_at(const AlgebraPresentation& a, const std::vector<Scalar>& coeffs,
                     const Element& v) {
  Element acc = a.zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = multiply(a, acc, v) + scale(coeffs[i], a.unit);
  }
  return acc;
}

// Monic minimal polynomial of v inside the span of the center basis, as
// Scalar coefficients (coeffs.size() == degree + 1, leading coefficient 1).
std::vector<Scalar> minimal_polynomial_in_span(const AlgebraPresentation& a,
                                               const std::vector<Element>& span,
                                               const Element& v) {
  const std::size_t m = span.size();
  std::vector<std::vector<Scalar>> power_coords;
  Element power = a.unit;
  for (std::size_t k = 0; k <= m; ++k) {
    auto coords = coordinates_in_span(a, span, power);
    if (!coords) throw std::logic_error("center power escaped the center span");
    if (k > 0) {
      ExactMatrix mat = ExactMatrix::from_columns(a.base, m, power_coords);
      auto sol = solve(mat, *coords);
      if (sol) {
        std::vector<Scalar> f(k + 1, Scalar::of(a.base, 0));
        for (std::size_t i = 0; i < k; ++i) f[i] = -(*sol)[i];
        f[k] = Scalar::of(a.base, 1);
        return f;
      }
    }
    power_coords.push_back(*coords);
    power = multiply(a, power, v);
  }
  throw std::logic_error("minimal polynomial exceeded the center rank");
}

struct FieldDecision {
  Tristate field;
  std::string note;
  std::optional<ZeroDivisorWitness> obstruction;
};

FieldDecision decide_finite_center(const AlgebraPresentation& a, const std::vector<Element>& c,
                                   const std::vector<std::vector<std::vector<Scalar>>>& g) {
  const std::size_t m = c.size();
  const std::int64_t p = a.base.p;
  auto unit_coords = coordinates_in_span(a, c, a.unit);
  if (!unit_coords) throw std::logic_error("unit escaped the center span");
  std::vector<std::int64_t> odo(m, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < m && ++odo[pos] == p) odo[pos++] = 0;
    if (pos == m) break;
    // Multiplication-by-c matrix in center coordinates, c = sum odo[i] c_i.
    ExactMatrix mat(a.base, m, m);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t r = 0; r < m; ++r) {
        Scalar acc = Scalar::of(a.base, 0);
        for (std::size_t i = 0; i < m; ++i) acc = acc + Scalar::of(a.base, odo[i]) * g[i][k][r];
        mat.at(r, k) = acc;
      }
    }
    if (!solve(mat, *unit_coords)) {
      std::vector<Scalar> coeffs;
      coeffs.reserve(m);
      for (std::size_t i = 0; i < m; ++i) coeffs.push_back(Scalar::of(a.base, odo[i]));
      Element bad = combine(a, c, coeffs);
      auto zd = is_zero_divisor(a, bad);
      if (!zd) throw std::logic_error("non-invertible central element is not a zero divisor");
      return {Tristate::No, "the finite center contains a non-invertible element", *zd};
    }
  }
  return {Tristate::Yes,
          "every non-zero element of the finite center is invertible (exhaustive scan)",
          std::nullopt};
}

FieldDecision decide_field(const AlgebraPresentation& a, const std::vector<Element>& c) {
  const std::size_t m = c.size();
  if (m == 1)
    return {Tristate::Yes, "center has rank 1: the base-field multiples of the unit", std::nullopt};

  for (const auto& e : c) {
    if (auto zd = is_zero_divisor(a, e)) {
      return {Tristate::No, "a center basis element is a zero divisor", *zd};
    }
  }

  // Structure constants of the center in its own basis (closure is an
  // invariant of the kernel computation; failure here is a program error).
  std::vector<std::vector<std::vector<Scalar>>> g(m, std::vector<std::vector<Scalar>>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto coords = coordinates_in_span(a, c, multiply(a, c[i], c[j]));
      if (!coords) throw std::logic_error("center is not multiplicatively closed");
      g[i][j] = *coords;
    }
  }

  if (a.base.kind == RingKind::PrimeField) {
    double size = 1.0;
    for (std::size_t i = 0; i < m; ++i) size *= static_cast<double>(a.base.p);
    if (size <= 65536.0) return decide_finite_center(a, c, g);
  }

  // Trace form of the center acting on itself; its kernel is the radical
  // (the base field is Q or F_p, both perfect), so a kernel vector yields a
  // nilpotent element.
  std::vector<Scalar> trace_vec(m, Scalar::of(a.base, 0));
  for (std::size_t w = 0; w < m; ++w) {
    Scalar t = Scalar::of(a.base, 0);
    for (std::size_t k = 0; k < m; ++k) t = t + g[w][k][k];
    trace_vec[w] = t;
  }
  ExactMatrix trace_form(a.base, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Scalar t = Scalar::of(a.base, 0);
      for (std::size_t w = 0; w < m; ++w) t = t + g[i][j][w] * trace_vec[w];
      trace_form.at(i, j) = t;
    }
  }
  auto radical = kernel_basis(trace_form);
  if (!radical.empty()) {
    Element w = combine(a, c, radical.front());
    Element power = w;
    for (std::size_t t = 2; t <= m + 1; ++t) {
      Element next = multiply(a, power, w);
      if (next.is_zero()) {
        ZeroDivisorWitness zd{power, w, true};
        verify_zero_divisor(a, zd);
        return {Tristate::No, "center contains a nilpotent element", zd};
      }
      power = next;
    }
    return {Tristate::Unknown, "center trace form is degenerate but no nilpotent witness surfaced",
            std::nullopt};
  }

  // Semisimple commutative center: hunt for a primitive element and decide by
  // the irreducibility of its minimal polynomial.
  std::vector<Element> candidates;
  for (const auto& e : c) candidates.push_back(e);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) candidates.push_back(c[i] + c[j]);
  {
    Element sum = a.zero();
    Element weighted = a.zero();
    for (std::size_t i = 0; i < m; ++i) {
      sum = sum + c[i];
      weighted = weighted + scale(Scalar::of(a.base, static_cast<long long>(i + 1)), c[i]);
    }
    candidates.push_back(sum);
    candidates.push_back(weighted);
  }
  {
    Rng rng(20240101ull);
    for (int t = 0; t < 32; ++t) {
      std::vector<Scalar> coeffs;
      coeffs.reserve(m);
      for (std::size_t i = 0; i < m; ++i)
        coeffs.push_back(Scalar::of(a.base, rng.uniform_int(-5, 5)));
      candidates.push_back(combine(a, c, coeffs));
    }
  }

  for (const auto& v : candidates) {
    if (v.is_zero()) continue;
    std::vector<Scalar> f = minimal_polynomial_in_span(a, c, v);
    if (f.size() != m + 1) continue;  // not a primitive element

    if (a.base.kind == RingKind::PrimeField) {
      FpPoly fp(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) fp[i] = f[i].residue();
      if (fp_poly_irreducible(fp, a.base.p))
        return {Tristate::Yes,
                "center is generated by an element with an irreducible minimal polynomial",
                std::nullopt};
      auto split = fp_poly_factor_split(fp, a.base.p);
      if (!split)
        return {Tristate::Unknown, "reducible minimal polynomial resisted factor splitting",
                std::nullopt};
      auto to_scalars = [&](const FpPoly& poly) {
        std::vector<Scalar> out;
        out.reserve(poly.size());
        for (auto r : poly) out.push_back(Scalar::of(a.base, r));
        return out;
      };
      ZeroDivisorWitness zd{eval_poly_at(a, to_scalars(split->first), v),
                            eval_poly_at(a, to_scalars(split->second), v), true};
      verify_zero_divisor(a, zd);
      return {Tristate::No, "center splits: the minimal polynomial of a generator factors", zd};
    }

    QPoly q(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) q[i] = f[i].rational_value();
    RationalRootScan scan = qpoly_rational_root(q);
    if (scan.root) {
      QPoly rest = qpoly_divide_linear(q, *scan.root);
      Element v1 = v + scale(Scalar::from_rational(a.base, -*scan.root), a.unit);
      std::vector<Scalar> rest_s;
      rest_s.reserve(rest.size());
      for (const auto& cf : rest) rest_s.push_back(Scalar::from_rational(a.base, cf));
      ZeroDivisorWitness zd{v1, eval_poly_at(a, rest_s, v), true};
      verify_zero_divisor(a, zd);
      return {Tristate::No,
              "center splits: the minimal polynomial of a generator has a rational root", zd};
    }
    if (!scan.exhaustive)
      return {Tristate::Unknown,
              "minimal-polynomial coefficients exceed the rational-root scan budget", std::nullopt};
    if (m <= 3)
      return {Tristate::Yes,
              "center is generated by an element whose rootless minimal polynomial of degree <= 3 "
              "is irreducible",
              std::nullopt};
    for (std::int64_t p : {3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL, 41LL,
                           43LL, 47LL, 53LL, 59LL, 61LL, 67LL, 71LL, 73LL, 79LL, 83LL, 89LL, 97LL}) {
      auto rp = qpoly_reduce_mod(q, p);
      if (rp && fp_poly_irreducible(*rp, p))
        return {Tristate::Yes,
                "center is generated by an element whose minimal polynomial is irreducible modulo "
                "a small prime",
                std::nullopt};
    }
    return {Tristate::Unknown,
            "minimal polynomial is rootless but irreducibility was not certified", std::nullopt};
  }
  return {Tristate::Unknown, "no primitive element located in the bounded search", std::nullopt};
}

}  // namespace

std::optional<ZeroDivisorWitness> is_zero_divisor(const AlgebraPresentation& a, const Element& v) {
  if (!a.base.is_field()) throw InputError("zero-divisor detection requires a field base ring");
  if (v.is_zero()) throw InputError("the zero element is excluded from zero-divisor queries");
  auto left_kernel = kernel_basis(left_mult_matrix(a, v));
  if (!left_kernel.empty()) {
    ZeroDivisorWitness w{v, Element{left_kernel.front()}, true};
    verify_zero_divisor(a, w);
    return w;
  }
  auto right_kernel = kernel_basis(right_mult_matrix(a, v));
  if (!right_kernel.empty()) {
    ZeroDivisorWitness w{v, Element{right_kernel.front()}, false};
    verify_zero_divisor(a, w);
    return w;
  }
  return std::nullopt;
}

bool is_central(const AlgebraPresentation& a, const Element& v) {
  for (std::size_t s = 0; s < a.dim; ++s) {
    if (!commutator(a, v, a.basis(s)).is_zero()) return false;
  }
  return true;
}

std::optional<std::vector<Scalar>> coordinates_in_span(const AlgebraPresentation& a,
                                                       const std::vector<Element>& span,
                                                       const Element& v) {
  if (span.empty()) {
    if (v.is_zero()) return std::vector<Scalar>{};
    return std::nullopt;
  }
  std::vector<std::vector<Scalar>> raw;
  raw.reserve(span.size());
  for (const auto& e : span) raw.push_back(e.coords);
  ExactMatrix mat = ExactMatrix::from_columns(a.base, a.dim, raw);
  return solve(mat, v.coords);
}

std::size_t rank_of_elements(const AlgebraPresentation& a, const std::vector<Element>& elems) {
  if (elems.empty()) return 0;
  std::vector<std::vector<Scalar>> raw;
  raw.reserve(elems.size());
  for (const auto& e : elems) raw.push_back(e.coords);
  return rref(ExactMatrix::from_columns(a.base, a.dim, raw)).rank;
}

std::optional<Element> central_inverse(const AlgebraPresentation& a, const Element& c) {
  if (!a.base.is_field()) throw InputError("inversion requires a field base ring");
  if (c.is_zero()) return std::nullopt;
  if (!is_central(a, c)) throw InputError("central_inverse requires a central element");
  auto sol = solve(left_mult_matrix(a, c), a.unit.coords);
  if (!sol) return std::nullopt;
  Element z{*sol};
  if (!(multiply(a, c, z) == a.unit) || !(multiply(a, z, c) == a.unit))
    throw std::logic_error("central inverse failed verification");
  return z;
}

CenterBasis center_basis(const AlgebraPresentation& a) {
  if (!a.base.is_field())
    throw InputError(
        "center computation requires a field base ring; lift integer presentations first");
  const std::size_t n = a.dim;
  ExactMatrix stacked(a.base, n * n, n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t u = 0; u < n; ++u) {
        stacked.at(s * n + u, t) = a.table[s][t].coords[u] - a.table[t][s].coords[u];
      }
    }
  }
  CenterBasis out;
  for (auto& coords : kernel_basis(stacked)) {
    Element e{std::move(coords)};
    if (!is_central(a, e)) throw std::logic_error("center basis element failed the centrality check");
    out.elements.push_back(std::move(e));
  }
  if (!coordinates_in_span(a, out.elements, a.unit))
    throw std::logic_error("unit is missing from the computed center");
  FieldDecision d = decide_field(a, out.elements);
  out.field = d.field;
  out.field_note = std::move(d.note);
  out.obstruction = std::move(d.obstruction);
  return out;
}

}  // namespace quatrec
