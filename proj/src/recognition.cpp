#include "recognition.hpp"

#include <stdexcept>

#include "errors.hpp"
#include "rng.hpp"

namespace quatrec {

std::string to_string(Stage s) {
  switch (s) {
    case Stage::Validation: return "validation";
    case Stage::Center: return "center";
    case Stage::CommutatorSquares: return "commutator_squares";
    case Stage::CommutatorRegularity: return "commutator_regularity";
    case Stage::Structure: return "structure";
    case Stage::Completeness: return "completeness";
    case Stage::Division: return "division";
    case Stage::Decomposition: return "decomposition";
    case Stage::Certificate: return "certificate";
  }
  return "unknown";
}

std::string to_string(RefusalReason r) {
  switch (r) {
    case RefusalReason::NotAssociative: return "not_associative";
    case RefusalReason::NotUnital: return "not_unital";
    case RefusalReason::Commutative: return "commutative";
    case RefusalReason::CharacteristicTwo: return "characteristic_two";
    case RefusalReason::CenterNotField: return "center_not_field";
    case RefusalReason::SquaresNotCentral: return "squares_not_central";
    case RefusalReason::CommutatorZeroDivisor: return "commutator_zero_divisor";
    case RefusalReason::NoncentralCommutatorMissing: return "noncentral_commutator_missing";
    case RefusalReason::FallbackFailed: return "fallback_failed";
    case RefusalReason::AnticommutationFailed: return "anticommutation_failed";
    case RefusalReason::DegenerateSquare: return "degenerate_square";
    case RefusalReason::DependentBasis: return "dependent_basis";
    case RefusalReason::DecompositionIncomplete: return "decomposition_incomplete";
    case RefusalReason::CentralInput: return "central_input";
    case RefusalReason::NoncentralAnticommutator: return "noncentral_anticommutator";
    case RefusalReason::SplitAlgebra: return "split_algebra";
  }
  return "unknown";
}

namespace {

bool characteristic_two(const AlgebraPresentation& a) {
  return a.base.kind == RingKind::PrimeField && a.base.p == 2;
}

double finite_element_count(const AlgebraPresentation& a) {
  double count = 1.0;
  for (std::size_t i = 0; i < a.dim; ++i) count *= static_cast<double>(a.base.p);
  return count;
}

}  // namespace

CommutatorScan scan_noncentral_commutator(const AlgebraPresentation& a, const CenterBasis& c) {
  (void)c;
  std::optional<std::size_t> x_idx;
  for (std::size_t s = 0; s < a.dim; ++s) {
    if (!is_central(a, a.basis(s))) {
      x_idx = s;
      break;
    }
  }
  if (!x_idx) {
    Refusal r;
    r.stage = Stage::Structure;
    r.reason = RefusalReason::Commutative;
    r.note = "every basis element is central, so no noncentral commutator exists";
    throw RefusalError(std::move(r));
  }
  Element x = a.basis(*x_idx);
  for (std::size_t t = 0; t < a.dim; ++t) {
    Element y = a.basis(t);
    Element v = commutator(a, x, y);
    if (v.is_zero()) continue;
    if (!is_central(a, v)) {
      return CommutatorScan{v, x, y, false, v};
    }
    Element vx = multiply(a, v, x);
    if (!vx.is_zero() && !is_central(a, vx)) {
      return CommutatorScan{vx, x, y, true, v};
    }
    Refusal r;
    r.stage = Stage::Structure;
    r.reason = RefusalReason::FallbackFailed;
    r.note = "the first non-zero basis commutator is central and so is its product with the "
             "generator";
    r.elements = {{"x", x}, {"y", y}, {"commutator", v}, {"fallback", vx}};
    throw RefusalError(std::move(r));
  }
  throw std::logic_error("noncentral basis element commutes with the whole basis");
}

QuaternionStructure build_quaternion_structure(const AlgebraPresentation& a, const CenterBasis& c,
                                               const RecognizeOptions& opts) {
  CommutatorScan scan = scan_noncentral_commutator(a, c);
  const Element& i = scan.v;

  Element j = a.zero();
  Element gen_s = a.zero();
  bool found = false;
  for (std::size_t s = 0; s < a.dim; ++s) {
    Element cand = commutator(a, i, a.basis(s));
    if (!cand.is_zero()) {
      j = cand;
      gen_s = a.basis(s);
      found = true;
      break;
    }
  }
  if (!found) {
    Rng rng(opts.seed);
    for (int t = 0; t < 256 && !found; ++t) {
      Element s = a.zero();
      for (std::size_t u = 0; u < a.dim; ++u) {
        if (a.base.kind == RingKind::PrimeField) {
          s.coords[u] = Scalar::of(a.base, static_cast<long long>(rng.uniform_below(
                                               static_cast<std::uint64_t>(a.base.p))));
        } else {
          s.coords[u] = Scalar::of(a.base, rng.uniform_int(-opts.height, opts.height));
        }
      }
      Element cand = commutator(a, i, s);
      if (!cand.is_zero()) {
        j = cand;
        gen_s = s;
        found = true;
      }
    }
  }
  if (!found) throw std::logic_error("noncentral element commutes with every basis element");

  // With j a commutator of i, the anticommutator ij + ji equals the
  // commutator of i^2 with the generator of j; it must vanish.
  Element anti = multiply(a, i, j) + multiply(a, j, i);
  if (!anti.is_zero()) {
    Refusal r;
    r.stage = Stage::Structure;
    r.reason = RefusalReason::AnticommutationFailed;
    r.note = "ij + ji = (i^2, s) is non-zero: the square of i is not central";
    r.elements = {{"i", i}, {"s", gen_s}, {"j", j}, {"anticommutator", anti}};
    throw RefusalError(std::move(r));
  }

  Element i2 = multiply(a, i, i);
  Element j2 = multiply(a, j, j);
  auto degenerate = [&](const char* name, const Element& gen, const Element& sq, const char* what) {
    Refusal r;
    r.stage = Stage::Structure;
    r.reason = RefusalReason::DegenerateSquare;
    r.note = std::string(name) + "^2 " + what;
    r.elements = {{name, gen}, {std::string(name) + "^2", sq}};
    return RefusalError(std::move(r));
  };
  if (i2.is_zero()) throw degenerate("i", i, i2, "is zero");
  if (!is_central(a, i2)) throw degenerate("i", i, i2, "is not central");
  if (j2.is_zero()) throw degenerate("j", j, j2, "is zero");
  if (!is_central(a, j2)) throw degenerate("j", j, j2, "is not central");

  Element k = multiply(a, i, j);
  if (rank_of_elements(a, {a.unit, i, j, k}) != 4) {
    Refusal r;
    r.stage = Stage::Structure;
    r.reason = RefusalReason::DependentBasis;
    r.note = "1, i, j, k are linearly dependent over the base field";
    r.elements = {{"i", i}, {"j", j}, {"k", k}};
    throw RefusalError(std::move(r));
  }

  QuaternionStructure q;
  q.i = i;
  q.j = j;
  q.k = k;
  q.i_squared = i2;
  q.j_squared = j2;
  q.gen_x = scan.x;
  q.gen_y = scan.y;
  q.gen_s = gen_s;
  q.fallback_used = scan.fallback_used;
  return q;
}

QuadraticCertificate quadratic_certificate(const AlgebraPresentation& a, const Element& x) {
  if (is_central(a, x)) {
    Refusal r;
    r.stage = Stage::Certificate;
    r.reason = RefusalReason::CentralInput;
    r.note = "central elements already satisfy a linear relation; the quadratic certificate needs "
             "a noncentral input";
    r.elements = {{"x", x}};
    throw RefusalError(std::move(r));
  }
  Element v = a.zero();
  bool found = false;
  for (std::size_t t = 0; t < a.dim; ++t) {
    Element cand = commutator(a, x, a.basis(t));
    if (!cand.is_zero()) {
      v = cand;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("noncentral element commutes with the whole basis");

  Element vx = multiply(a, v, x);
  QuadraticCertificate cert;
  cert.x = x;
  cert.v = v;
  cert.a = multiply(a, v, v);
  cert.c = multiply(a, vx, vx);
  Element s = v + vx;
  cert.b = cert.a + cert.c - multiply(a, s, s);

  Element x2 = multiply(a, x, x);
  Element lhs = multiply(a, cert.a, x2) + multiply(a, cert.b, x) + cert.c;
  cert.identity_holds = lhs.is_zero();
  cert.a_central = is_central(a, cert.a);
  cert.b_central = is_central(a, cert.b);
  cert.c_central = is_central(a, cert.c);
  cert.a_nonzero = !cert.a.is_zero();
  cert.c_nonzero = !cert.c.is_zero();
  return cert;
}

Decomposition decompose_element(const AlgebraPresentation& a, const QuaternionStructure& q,
                                const Element& x) {
  if (characteristic_two(a)) {
    Refusal r;
    r.stage = Stage::Decomposition;
    r.reason = RefusalReason::CharacteristicTwo;
    r.note = "the decomposition divides by 2";
    throw RefusalError(std::move(r));
  }
  Decomposition out{a.zero(), a.zero(), a.zero(), a.zero(), a.zero(), false};
  if (is_central(a, x)) {
    out.c0 = x;
    out.complete = true;
    return out;
  }

  QuadraticCertificate cert = quadratic_certificate(a, x);
  auto degenerate = [&](const char* what) {
    Refusal r;
    r.stage = Stage::Decomposition;
    r.reason = RefusalReason::DegenerateSquare;
    r.note = what;
    r.elements = {{"x", x}, {"v", cert.v}, {"v^2", cert.a}};
    return RefusalError(std::move(r));
  };
  if (!cert.a_nonzero) throw degenerate("the commutator square v^2 vanishes");
  if (!cert.a_central) throw degenerate("the commutator square v^2 is not central");

  auto invert_central = [&](const Element& denom) {
    auto inv = central_inverse(a, denom);
    if (!inv) {
      Refusal r;
      r.stage = Stage::Decomposition;
      r.reason = RefusalReason::CenterNotField;
      r.note = "a central denominator is not invertible";
      r.elements = {{"denominator", denom}};
      r.zero_divisor = is_zero_divisor(a, denom);
      throw RefusalError(std::move(r));
    }
    return *inv;
  };

  const Scalar half = Scalar::of(a.base, 2).inverse();
  // Monic form x^2 - bt x + ct with bt = -b/a; the centered part is
  // p = x - bt/2.
  Element b_over_a = multiply(a, cert.b, invert_central(cert.a));
  out.c0 = scale(-half, b_over_a);
  Element p = x - out.c0;

  const Element* units[3] = {&q.i, &q.j, &q.k};
  Element* slots[3] = {&out.c1, &out.c2, &out.c3};
  for (int t = 0; t < 3; ++t) {
    const Element& u = *units[t];
    Element d = multiply(a, p, u) + multiply(a, u, p);
    if (!is_central(a, d)) {
      Refusal r;
      r.stage = Stage::Decomposition;
      r.reason = RefusalReason::NoncentralAnticommutator;
      r.note = "p u + u p escapes the center";
      r.elements = {{"x", x}, {"u", u}, {"anticommutator", d}};
      throw RefusalError(std::move(r));
    }
    Element denom = scale(Scalar::of(a.base, 2), multiply(a, u, u));
    if (!is_central(a, denom)) throw degenerate("a quaternion generator has a noncentral square");
    *slots[t] = multiply(a, d, invert_central(denom));
  }

  out.residual = p - multiply(a, out.c1, q.i) - multiply(a, out.c2, q.j) - multiply(a, out.c3, q.k);
  out.complete = out.residual.is_zero();
  return out;
}

CompletenessReport completeness_check(const AlgebraPresentation& a, const CenterBasis& c,
                                      const QuaternionStructure& q) {
  CompletenessReport report;
  report.dim = a.dim;
  report.center_rank = c.rank();
  report.expected_rank = 4 * c.rank();

  std::vector<Element> products;
  products.reserve(4 * c.rank());
  for (const Element& z : c.elements) {
    products.push_back(multiply(a, z, a.unit));
    products.push_back(multiply(a, z, q.i));
    products.push_back(multiply(a, z, q.j));
    products.push_back(multiply(a, z, q.k));
  }
  report.achieved_rank = rank_of_elements(a, products);

  for (std::size_t s = 0; s < a.dim; ++s) {
    try {
      Decomposition d = decompose_element(a, q, a.basis(s));
      if (!d.complete) {
        report.failing_basis = s;
        Refusal r;
        r.stage = Stage::Completeness;
        r.reason = RefusalReason::DecompositionIncomplete;
        r.note = "a basis element leaves a non-zero residual";
        r.basis_index = s;
        r.elements = {{"residual", d.residual}};
        report.failure = std::move(r);
        break;
      }
    } catch (const RefusalError& e) {
      report.failing_basis = s;
      report.failure = e.refusal();
      break;
    }
  }

  report.complete = !report.failure && report.achieved_rank == a.dim;
  if (!report.failure && report.achieved_rank != a.dim) {
    Refusal r;
    r.stage = Stage::Completeness;
    r.reason = RefusalReason::DecompositionIncomplete;
    r.note = "the center multiples of 1, i, j, k do not span the algebra";
    report.failure = std::move(r);
  }
  return report;
}

RecognitionOutcome recognize(const AlgebraPresentation& a, const RecognizeOptions& opts) {
  RecognitionOutcome out;
  out.working = a;

  out.validation = validate(a);
  if (!out.validation.associative) {
    Refusal r;
    r.stage = Stage::Validation;
    r.reason = RefusalReason::NotAssociative;
    r.note = "a basis triple fails associativity";
    r.triple = out.validation.failing_triple;
    out.refusal = std::move(r);
    out.recognized = Tristate::No;
    return out;
  }
  if (!out.validation.unital) {
    Refusal r;
    r.stage = Stage::Validation;
    r.reason = RefusalReason::NotUnital;
    r.note = "the declared unit fails a unit law";
    r.basis_index = out.validation.failing_unit_index;
    out.refusal = std::move(r);
    out.recognized = Tristate::No;
    return out;
  }
  if (out.validation.commutative) {
    Refusal r;
    r.stage = Stage::Validation;
    r.reason = RefusalReason::Commutative;
    r.note = "commutative presentations have no noncentral commutator and cannot be quaternion "
             "algebras over their center";
    out.refusal = std::move(r);
    out.recognized = Tristate::No;
    return out;
  }

  if (a.base.kind == RingKind::Integer) {
    out.working = lift_to_rationals(a);
    out.lifted = true;
  }
  const AlgebraPresentation& w = out.working;
  SampleOptions so{opts.seed, opts.samples, opts.height};

  out.center = center_basis(w);

  out.squares = check_commutator_squares_central(w, CheckMode::Symbolic, so);

  {
    CheckMode mode = CheckMode::Randomized;
    if (w.base.kind == RingKind::PrimeField) {
      double pairs = finite_element_count(w);
      pairs *= pairs;
      if (pairs <= 16777216.0) mode = CheckMode::Exhaustive;
    }
    out.regularity = check_commutators_regular(w, mode, so);
  }

  // Characteristic 2 is refused only after both hypothesis verdicts are on
  // record: the checks themselves are characteristic-free, but everything
  // from the structure scan onward divides by 2.
  if (characteristic_two(w)) {
    Refusal r;
    r.stage = Stage::Structure;
    r.reason = RefusalReason::CharacteristicTwo;
    r.note = "the quaternion construction divides by 2; characteristic 2 is refused after the "
             "hypothesis checks";
    out.refusal = std::move(r);
    out.recognized = Tristate::No;
    return out;
  }

  if (out.squares->failed()) {
    Refusal r;
    r.stage = Stage::CommutatorSquares;
    r.reason = RefusalReason::SquaresNotCentral;
    r.note = "a commutator square escapes the center";
    r.square_witness = out.squares->witness;
    out.refusal = std::move(r);
    out.recognized = Tristate::No;
    return out;
  }

  if (out.regularity->failed()) {
    Refusal r;
    r.stage = Stage::CommutatorRegularity;
    r.reason = RefusalReason::CommutatorZeroDivisor;
    r.note = "a non-zero commutator is a zero divisor";
    r.regularity_witness = out.regularity->witness;
    out.refusal = std::move(r);
    out.recognized = Tristate::No;
    return out;
  }

  if (out.center->field == Tristate::No) {
    Refusal r;
    r.stage = Stage::Center;
    r.reason = RefusalReason::CenterNotField;
    r.note = out.center->field_note;
    r.zero_divisor = out.center->obstruction;
    out.refusal = std::move(r);
    out.recognized = Tristate::No;
    return out;
  }
  if (out.center->field == Tristate::Unknown) {
    out.note = "center field status undecided: " + out.center->field_note;
    out.recognized = Tristate::Unknown;
    return out;
  }

  try {
    out.structure = build_quaternion_structure(w, *out.center, opts);
  } catch (const RefusalError& e) {
    out.refusal = e.refusal();
    out.recognized = Tristate::No;
    return out;
  }

  out.completeness = completeness_check(w, *out.center, *out.structure);
  if (!out.completeness->complete) {
    out.refusal = out.completeness->failure;
    out.recognized = Tristate::No;
    return out;
  }

  if (w.base.kind == RingKind::PrimeField) {
    // A finite noncommutative algebra cannot be a division ring, so a zero
    // divisor must exist; surface one.
    if (finite_element_count(w) > 1048576.0) {
      out.note = "finite algebra too large for the split search";
      out.recognized = Tristate::Unknown;
      return out;
    }
    const std::int64_t p = w.base.p;
    std::vector<std::int64_t> odo(w.dim, 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < w.dim && ++odo[pos] == p) odo[pos++] = 0;
      if (pos == w.dim) break;
      Element e = w.zero();
      for (std::size_t i = 0; i < w.dim; ++i) e.coords[i] = Scalar::of(w.base, odo[i]);
      if (auto zd = is_zero_divisor(w, e)) {
        Refusal r;
        r.stage = Stage::Division;
        r.reason = RefusalReason::SplitAlgebra;
        r.note = "a finite algebra with a noncentral element always splits";
        r.zero_divisor = *zd;
        out.refusal = std::move(r);
        out.recognized = Tristate::No;
        return out;
      }
    }
    throw std::logic_error("finite noncommutative algebra without zero divisors");
  }

  if (out.center->rank() != 1) {
    out.note = "center has rank " + std::to_string(out.center->rank()) +
               ": the rational norm-form classification needs a rank-1 center";
    out.recognized = Tristate::Unknown;
    return out;
  }

  auto qa = coordinates_in_span(w, {w.unit}, out.structure->i_squared);
  auto qb = coordinates_in_span(w, {w.unit}, out.structure->j_squared);
  if (!qa || !qb) throw std::logic_error("central square escaped the rank-1 center");
  Rational ra = (*qa)[0].rational_value();
  Rational rb = (*qb)[0].rational_value();
  out.division = is_division(ra, rb);

  if (out.division->division == Tristate::Yes) {
    if (!out.regularity->conclusive_holds()) {
      out.regularity->kind = RegularCommutatorsVerdict::Kind::HoldsImplied;
      out.regularity->note =
          "implied: a division algebra has no zero divisors, so no commutator is one";
    }
    out.recognized = Tristate::Yes;
    return out;
  }
  if (out.division->division == Tristate::No) {
    Refusal r;
    r.stage = Stage::Division;
    r.reason = RefusalReason::SplitAlgebra;
    r.note = out.division->note;
    r.isotropic = out.division->isotropic;
    if (out.division->isotropic) {
      const auto& v = *out.division->isotropic;
      Element qel = scale(Scalar::of(w.base, v[0]), w.unit) +
                    scale(Scalar::of(w.base, v[1]), out.structure->i) +
                    scale(Scalar::of(w.base, v[2]), out.structure->j) +
                    scale(Scalar::of(w.base, v[3]), out.structure->k);
      Element conj = scale(Scalar::of(w.base, v[0]), w.unit) -
                     scale(Scalar::of(w.base, v[1]), out.structure->i) -
                     scale(Scalar::of(w.base, v[2]), out.structure->j) -
                     scale(Scalar::of(w.base, v[3]), out.structure->k);
      if (qel.is_zero() || conj.is_zero() || !multiply(w, qel, conj).is_zero())
        throw std::logic_error("isotropic vector did not produce a zero divisor");
      r.zero_divisor = ZeroDivisorWitness{qel, conj, true};
    }
    out.refusal = std::move(r);
    out.recognized = Tristate::No;
    return out;
  }
  out.note = "division undecided: " + out.division->note;
  out.recognized = Tristate::Unknown;
  return out;
}

}  // namespace quatrec
