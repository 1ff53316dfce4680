#include <optional>
#include <string>
#include <vector>

#include "builtin.hpp"
#include "center.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "helpers.hpp"
#include "hypotheses.hpp"
#include "recognition.hpp"

using namespace quatrec;

namespace {

// The same algebra expressed over a new basis; products are recomputed in the
// original presentation and solved back into the new coordinates.
AlgebraPresentation rebase(const AlgebraPresentation& a, const std::vector<Element>& vecs,
                           std::vector<std::string> names) {
  AlgebraPresentation b;
  b.base = a.base;
  b.dim = vecs.size();
  b.names = std::move(names);
  b.table.assign(b.dim, std::vector<Element>(b.dim));
  for (std::size_t s = 0; s < b.dim; ++s)
    for (std::size_t t = 0; t < b.dim; ++t) {
      auto coords = coordinates_in_span(a, vecs, multiply(a, vecs[s], vecs[t]));
      REQUIRE(coords);
      Element e = b.zero();
      e.coords = *coords;
      b.table[s][t] = e;
    }
  auto unit = coordinates_in_span(a, vecs, a.unit);
  REQUIRE(unit);
  b.unit = b.zero();
  b.unit.coords = *unit;
  return b;
}

// A ⊗ A with basis e_{s1} ⊗ e_{s2} at index s1 * dim + s2.
AlgebraPresentation tensor_square(const AlgebraPresentation& a) {
  const std::size_t n = a.dim;
  AlgebraPresentation b;
  b.base = a.base;
  b.dim = n * n;
  b.names.resize(b.dim);
  for (std::size_t s1 = 0; s1 < n; ++s1)
    for (std::size_t s2 = 0; s2 < n; ++s2)
      b.names[s1 * n + s2] = a.names[s1] + "(x)" + a.names[s2];
  b.table.assign(b.dim, std::vector<Element>(b.dim));
  for (std::size_t s1 = 0; s1 < n; ++s1)
    for (std::size_t s2 = 0; s2 < n; ++s2)
      for (std::size_t t1 = 0; t1 < n; ++t1)
        for (std::size_t t2 = 0; t2 < n; ++t2) {
          Element e = b.zero();
          for (std::size_t u1 = 0; u1 < n; ++u1)
            for (std::size_t u2 = 0; u2 < n; ++u2)
              e.coords[u1 * n + u2] = a.table[s1][t1].coords[u1] * a.table[s2][t2].coords[u2];
          b.table[s1 * n + s2][t1 * n + t2] = e;
        }
  b.unit = b.zero();
  for (std::size_t u1 = 0; u1 < n; ++u1)
    for (std::size_t u2 = 0; u2 < n; ++u2)
      b.unit.coords[u1 * n + u2] = a.unit.coords[u1] * a.unit.coords[u2];
  return b;
}

// F4 with the squaring twist glued on over F2: basis {1, w, u, z = wu} with
// w^2 = 1 + w, u^2 = 1, and u a = a^2 u.  Noncommutative; every commutator
// square lands in F2, and the scan produces i = j = u.
AlgebraPresentation twisted_quartic() {
  return make_presentation(
      BaseRing::Fp(2), {1, 0, 0, 0},
      {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
       {{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}},
       {{0, 0, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}, {1, 1, 0, 0}},
       {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}},
      {"1", "w", "u", "z"});
}

// Upper-triangular 3x3 over F2 in the basis {1, E22, E12+E23, E13, E12, E33}:
// the scan lands on i = E12 + E23 whose square E13 is noncentral, but the
// anticommutator 2 i^2 vanishes in characteristic 2.
AlgebraPresentation rebased_ut3_f2() {
  AlgebraPresentation ut3 = builtin("upper_triangular(3,F2)");
  return rebase(ut3,
                {ut3.unit, ut3.basis(3), elem(ut3, {0, 1, 0, 0, 1, 0}), ut3.basis(2),
                 ut3.basis(1), ut3.basis(5)},
                {"1", "d", "n", "E13", "E12", "E33"});
}

template <typename F>
Refusal expect_refusal(F&& f, RefusalReason reason) {
  try {
    f();
  } catch (const RefusalError& e) {
    CHECK(e.refusal().reason == reason);
    return e.refusal();
  }
  FAIL("expected a refusal");
  return {};
}

std::optional<Element> named(const Refusal& r, const std::string& key) {
  for (const auto& [k, v] : r.elements)
    if (k == key) return v;
  return std::nullopt;
}

void check_certificate(const AlgebraPresentation& a, const QuadraticCertificate& cert) {
  CHECK(cert.identity_holds);
  CHECK(cert.a_central);
  CHECK(cert.b_central);
  CHECK(cert.c_central);
  CHECK(cert.a_nonzero);
  CHECK(cert.c_nonzero);
  Element x2 = multiply(a, cert.x, cert.x);
  Element lhs = multiply(a, cert.a, x2) + multiply(a, cert.b, cert.x) + cert.c;
  CHECK(lhs.is_zero());
}

}  // namespace

TEST_SUITE_BEGIN("recognition");

TEST_CASE("the structure scan over the quaternions is pinned") {
  AlgebraPresentation h = builtin("hamilton");
  CenterBasis c = center_basis(h);
  CommutatorScan scan = scan_noncentral_commutator(h, c);
  CHECK(scan.v == elem(h, {0, 0, 0, 2}));  // (i, j) = 2k
  CHECK(scan.x == h.basis(1));
  CHECK(scan.y == h.basis(2));
  CHECK(!scan.fallback_used);

  QuaternionStructure q = build_quaternion_structure(h, c);
  CHECK(q.i == elem(h, {0, 0, 0, 2}));    // 2k
  CHECK(q.j == elem(h, {0, 0, 4, 0}));    // (2k, i) = 4j
  CHECK(q.k == elem(h, {0, -8, 0, 0}));   // (2k)(4j) = -8i
  CHECK(q.i_squared == scale(Q(-4), h.unit));
  CHECK(q.j_squared == scale(Q(-16), h.unit));
  CHECK(q.gen_s == h.basis(1));
  CHECK(!q.fallback_used);
  CHECK(multiply(h, q.i, q.j) + multiply(h, q.j, q.i) == h.zero());
  CHECK(rank_of_elements(h, {h.unit, q.i, q.j, q.k}) == 4);
}

TEST_CASE("quadratic certificates over the quaternions are pinned") {
  AlgebraPresentation h = builtin("hamilton");

  QuadraticCertificate c1 = quadratic_certificate(h, h.basis(1));  // x = i
  CHECK(c1.v == elem(h, {0, 0, 0, 2}));
  CHECK(c1.a == scale(Q(-4), h.unit));
  CHECK(c1.b == h.zero());
  CHECK(c1.c == scale(Q(-4), h.unit));
  check_certificate(h, c1);

  QuadraticCertificate c2 = quadratic_certificate(h, elem(h, {0, 1, 1, 0}));  // x = i + j
  CHECK(c2.v == elem(h, {0, 0, 0, -2}));
  CHECK(c2.a == scale(Q(-4), h.unit));
  CHECK(c2.b == h.zero());
  CHECK(c2.c == scale(Q(-8), h.unit));
  check_certificate(h, c2);

  QuadraticCertificate c3 = quadratic_certificate(h, elem(h, {1, 1, 0, 0}));  // x = 1 + i
  CHECK(c3.a == scale(Q(-4), h.unit));
  CHECK(c3.b == scale(Q(8), h.unit));
  CHECK(c3.c == scale(Q(-8), h.unit));
  check_certificate(h, c3);
}

TEST_CASE("the quadratic certificate refuses central input") {
  AlgebraPresentation h = builtin("hamilton");
  Refusal r = expect_refusal([&] { (void)quadratic_certificate(h, scale(Q(3), h.unit)); },
                             RefusalReason::CentralInput);
  CHECK(r.stage == Stage::Certificate);
}

TEST_CASE("random certificates over division quaternions") {
  for (const char* desc : {"hamilton", "quaternion(2,5,Q)", "quaternion(-1,-7,Q)"}) {
    AlgebraPresentation a = builtin(desc);
    Rng rng(11);
    int done = 0;
    while (done < 50) {
      Element x = random_element(a, rng, 20);
      if (is_central(a, x)) continue;
      ++done;
      check_certificate(a, quadratic_certificate(a, x));
    }
  }
}

TEST_CASE("decomposition over the canonical quaternion basis is exact") {
  AlgebraPresentation h = builtin("hamilton");
  QuaternionStructure q;
  q.i = h.basis(1);
  q.j = h.basis(2);
  q.k = h.basis(3);
  q.i_squared = -h.unit;
  q.j_squared = -h.unit;

  Element x = elem(h, {1, 2, 3, 4});
  Decomposition d = decompose_element(h, q, x);
  CHECK(d.complete);
  CHECK(d.residual.is_zero());
  CHECK(d.c0 == scale(Q(1), h.unit));
  CHECK(d.c1 == scale(Q(2), h.unit));
  CHECK(d.c2 == scale(Q(3), h.unit));
  CHECK(d.c3 == scale(Q(4), h.unit));

  Element back = d.c0 + multiply(h, d.c1, q.i) + multiply(h, d.c2, q.j) + multiply(h, d.c3, q.k);
  CHECK(back == x);

  Decomposition central = decompose_element(h, q, scale(Q(5), h.unit));
  CHECK(central.complete);
  CHECK(central.c0 == scale(Q(5), h.unit));
  CHECK(central.c1.is_zero());
}

TEST_CASE("decomposition matches an independent linear solve") {
  for (const char* desc : {"hamilton", "quaternion(2,5,Q)"}) {
    RecognitionOutcome out = recognize(builtin(desc));
    REQUIRE(out.structure);
    const AlgebraPresentation& w = out.working;
    const QuaternionStructure& q = *out.structure;
    Rng rng(23);
    for (int it = 0; it < 60; ++it) {
      Element x = random_element(w, rng, 12);
      Decomposition d = decompose_element(w, q, x);
      CHECK(d.complete);
      CHECK(d.residual.is_zero());
      Element back =
          d.c0 + multiply(w, d.c1, q.i) + multiply(w, d.c2, q.j) + multiply(w, d.c3, q.k);
      CHECK(back == x);

      auto oracle = coordinates_in_span(w, {w.unit, q.i, q.j, q.k}, x);
      REQUIRE(oracle);
      CHECK(d.c0 == scale((*oracle)[0], w.unit));
      CHECK(d.c1 == scale((*oracle)[1], w.unit));
      CHECK(d.c2 == scale((*oracle)[2], w.unit));
      CHECK(d.c3 == scale((*oracle)[3], w.unit));
    }
  }
}

TEST_CASE("decomposition refuses characteristic two before dividing") {
  BaseRing f2 = BaseRing::Fp(2);
  AlgebraPresentation a = make_quaternion(Scalar::of(f2, 1), Scalar::of(f2, 1), f2);
  QuaternionStructure q;
  q.i = a.basis(1);
  q.j = a.basis(2);
  q.k = a.basis(3);
  q.i_squared = a.unit;
  q.j_squared = a.unit;
  Refusal r = expect_refusal([&] { (void)decompose_element(a, q, a.basis(1)); },
                             RefusalReason::CharacteristicTwo);
  CHECK(r.stage == Stage::Decomposition);
}

TEST_CASE("the scan falls back to v*x when the first commutator is central") {
  // Full 2x2 matrices over F2 with the basis re-ordered so the scan starts at
  // E12: the commutator (E12, E21) = E11 + E22 is the unit, and the fallback
  // (E12, E21) * E12 = E12 is noncentral.
  AlgebraPresentation m = builtin("matrix(2,F2)");
  AlgebraPresentation re = rebase(
      m, {m.basis(1), m.basis(2), m.basis(0), m.basis(3)}, {"E12", "E21", "E11", "E22"});
  CHECK(validate(re).ok());
  CenterBasis c = center_basis(re);
  CommutatorScan scan = scan_noncentral_commutator(re, c);
  CHECK(scan.fallback_used);
  CHECK(scan.direct_commutator == re.unit);
  CHECK(scan.v == re.basis(0));

  // The build then dies on i = E12 squaring to zero.
  Refusal r = expect_refusal([&] { (void)build_quaternion_structure(re, c); },
                             RefusalReason::DegenerateSquare);
  CHECK(r.stage == Stage::Structure);
  auto sq = named(r, "i^2");
  REQUIRE(sq);
  CHECK(sq->is_zero());
}

TEST_CASE("a successful fallback can still end with a dependent basis") {
  // Basis {E12 + E21, E12, E11, E22} of matrix(2,F2): the scan falls back to
  // i = E12 + E21 with i^2 = 1, the next commutator is the central unit, and
  // {1, i, j, ij} collapses to rank 2.
  AlgebraPresentation m = builtin("matrix(2,F2)");
  Element sigma = elem(m, {0, 1, 1, 0});
  AlgebraPresentation re =
      rebase(m, {sigma, m.basis(1), m.basis(0), m.basis(3)}, {"s", "E12", "E11", "E22"});
  CHECK(validate(re).ok());
  CenterBasis c = center_basis(re);
  CommutatorScan scan = scan_noncentral_commutator(re, c);
  CHECK(scan.fallback_used);
  Refusal r = expect_refusal([&] { (void)build_quaternion_structure(re, c); },
                             RefusalReason::DependentBasis);
  CHECK(r.stage == Stage::Structure);
}

TEST_CASE("the scan refuses when the fallback is central too") {
  // span{1, E12, E23, E13} inside the upper-triangular 3x3 matrices: the only
  // non-zero basis commutator E13 is central and annihilates the generator.
  AlgebraPresentation ut3 = builtin("upper_triangular(3,Q)");
  AlgebraPresentation flag = rebase(
      ut3, {ut3.unit, ut3.basis(1), ut3.basis(4), ut3.basis(2)}, {"1", "a", "b", "c"});
  CHECK(validate(flag).ok());
  CHECK(!validate(flag).commutative);
  CenterBasis c = center_basis(flag);
  CHECK(c.rank() == 2);
  Refusal r = expect_refusal([&] { (void)scan_noncentral_commutator(flag, c); },
                             RefusalReason::FallbackFailed);
  CHECK(r.stage == Stage::Structure);
  auto fb = named(r, "fallback");
  REQUIRE(fb);
  CHECK(fb->is_zero());
  auto comm = named(r, "commutator");
  REQUIRE(comm);
  CHECK(is_central(flag, *comm));
}

TEST_CASE("anticommutation failure carries the obstruction") {
  // Upper-triangular 3x3 over the basis {1, diag(0,1,2), E12+E23, E13, E12,
  // E33}: the scan now finds i = -(E12+E23) whose square E13 is noncentral,
  // so ij + ji = (i^2, s) cannot vanish.
  AlgebraPresentation ut3 = builtin("upper_triangular(3,Q)");
  std::vector<Element> vecs = {ut3.unit,         elem(ut3, {0, 0, 0, 1, 0, 2}),
                               elem(ut3, {0, 1, 0, 0, 1, 0}), ut3.basis(2),
                               ut3.basis(1),     ut3.basis(5)};
  AlgebraPresentation re = rebase(ut3, vecs, {"1", "d", "n", "E13", "E12", "E33"});
  CHECK(validate(re).ok());
  CenterBasis c = center_basis(re);
  Refusal r = expect_refusal([&] { (void)build_quaternion_structure(re, c); },
                             RefusalReason::AnticommutationFailed);
  CHECK(r.stage == Stage::Structure);
  auto i = named(r, "i");
  auto j = named(r, "j");
  auto anti = named(r, "anticommutator");
  REQUIRE(i);
  REQUIRE(j);
  REQUIRE(anti);
  CHECK(!anti->is_zero());
  CHECK(multiply(re, *i, *j) + multiply(re, *j, *i) == *anti);
  CHECK(*anti == scale(Q(2), multiply(re, *i, *i)));
}

TEST_CASE("a noncentral commutator square stops the build in characteristic two") {
  AlgebraPresentation re = rebased_ut3_f2();
  CHECK(validate(re).ok());
  CHECK(!validate(re).commutative);

  CentralSquaresVerdict sym = check_commutator_squares_central(re, CheckMode::Symbolic);
  CHECK(sym.failed());
  REQUIRE(sym.witness);
  Element v = commutator(re, sym.witness->x, sym.witness->y);
  CHECK(v == sym.witness->v);
  CHECK(!is_central(re, multiply(re, v, v)));
  CentralSquaresVerdict exh = check_commutator_squares_central(re, CheckMode::Exhaustive);
  CHECK(exh.failed());

  CenterBasis c = center_basis(re);
  CHECK(c.rank() == 1);
  // In characteristic 2 the anticommutator check 2 i^2 = 0 passes vacuously,
  // so the noncentral square itself is what stops the build.
  Refusal r = expect_refusal([&] { (void)build_quaternion_structure(re, c); },
                             RefusalReason::DegenerateSquare);
  auto sq = named(r, "i^2");
  REQUIRE(sq);
  CHECK(!sq->is_zero());
  CHECK(!is_central(re, *sq));
}

TEST_CASE("a collapsing candidate basis is refused without a fallback") {
  AlgebraPresentation cyc = twisted_quartic();
  CHECK(validate(cyc).ok());
  CHECK(!validate(cyc).commutative);
  CHECK(check_commutator_squares_central(cyc, CheckMode::Symbolic).kind ==
        CentralSquaresVerdict::Kind::HoldsSymbolic);

  CenterBasis c = center_basis(cyc);
  CommutatorScan scan = scan_noncentral_commutator(cyc, c);
  CHECK(!scan.fallback_used);
  CHECK(scan.v == cyc.basis(2));  // (w, u) = u
  Refusal r = expect_refusal([&] { (void)build_quaternion_structure(cyc, c); },
                             RefusalReason::DependentBasis);
  CHECK(r.stage == Stage::Structure);
}

TEST_CASE("completeness counts center multiples of the quaternion basis") {
  RecognitionOutcome h = recognize(builtin("hamilton"));
  REQUIRE(h.completeness);
  CHECK(h.completeness->complete);
  CHECK(h.completeness->center_rank == 1);
  CHECK(h.completeness->expected_rank == 4);
  CHECK(h.completeness->achieved_rank == 4);

  AlgebraPresentation ext = make_quadratic_extension_tensor(builtin("hamilton"), Q(2));
  RecognitionOutcome e = recognize(ext);
  REQUIRE(e.center);
  CHECK(e.center->rank() == 2);
  CHECK(e.center->field == Tristate::Yes);
  REQUIRE(e.completeness);
  CHECK(e.completeness->complete);
  CHECK(e.completeness->expected_rank == 8);
  CHECK(e.completeness->achieved_rank == 8);
  CHECK(e.recognized == Tristate::Unknown);
  CHECK(e.note.find("rank 2") != std::string::npos);
}

TEST_CASE("an incomplete span reports the failing basis element") {
  AlgebraPresentation tt = tensor_square(builtin("hamilton"));
  CHECK(validate(tt).ok());
  CenterBasis c = center_basis(tt);
  CHECK(c.rank() == 1);

  QuaternionStructure q;
  q.i = tt.basis(4);    // i (x) 1
  q.j = tt.basis(8);    // j (x) 1
  q.k = tt.basis(12);   // k (x) 1
  q.i_squared = -tt.unit;
  q.j_squared = -tt.unit;

  CompletenessReport rep = completeness_check(tt, c, q);
  CHECK(!rep.complete);
  CHECK(rep.achieved_rank == 4);
  CHECK(rep.expected_rank == 4);
  CHECK(rep.dim == 16);
  REQUIRE(rep.failure);
  CHECK(rep.failure->reason == RefusalReason::NoncentralAnticommutator);
  REQUIRE(rep.failing_basis);
  CHECK(*rep.failing_basis == 1);  // 1 (x) i
  auto anti = named(*rep.failure, "anticommutator");
  REQUIRE(anti);
  CHECK(!is_central(tt, *anti));
}

TEST_CASE("recognize accepts the division quaternions end to end") {
  RecognitionOutcome out = recognize(builtin("hamilton"));
  CHECK(out.recognized == Tristate::Yes);
  CHECK(!out.refusal);
  REQUIRE(out.squares);
  CHECK(out.squares->kind == CentralSquaresVerdict::Kind::HoldsSymbolic);
  REQUIRE(out.regularity);
  CHECK(out.regularity->kind == RegularCommutatorsVerdict::Kind::HoldsImplied);
  REQUIRE(out.division);
  CHECK(out.division->division == Tristate::Yes);
  bool at_infinity = false;
  for (const auto& [place, symbol] : out.division->evidence)
    if (place == "infinity" && symbol == -1) at_infinity = true;
  CHECK(at_infinity);

  RecognitionOutcome lip = recognize(builtin("lipschitz"));
  CHECK(lip.lifted);
  CHECK(lip.recognized == Tristate::Yes);
  CHECK(lip.working.base.kind == RingKind::Rational);

  RecognitionOutcome q25 = recognize(builtin("quaternion(2,5,Q)"));
  CHECK(q25.recognized == Tristate::Yes);
  REQUIRE(q25.division);
  bool at_five = false;
  for (const auto& [place, symbol] : q25.division->evidence)
    if (place == "5" && symbol == -1) at_five = true;
  CHECK(at_five);
}

TEST_CASE("recognize splits quaternion(1,1,Q) with a verified isotropic vector") {
  RecognitionOutcome out = recognize(builtin("quaternion(1,1,Q)"));
  CHECK(out.recognized == Tristate::No);
  REQUIRE(out.refusal);
  CHECK(out.refusal->stage == Stage::Division);
  CHECK(out.refusal->reason == RefusalReason::SplitAlgebra);
  REQUIRE(out.division);
  REQUIRE(out.refusal->isotropic);
  // The recorded vector annihilates the norm form of the *built* structure
  // (the scanned generators square to -4 and 16, not to the input 1 and 1).
  const auto& iso = *out.refusal->isotropic;
  CHECK(quaternion_norm(out.division->form.first, out.division->form.second,
                        {iso[0], iso[1], iso[2], iso[3]}) == Rational(0));
  REQUIRE(out.refusal->zero_divisor);
  const ZeroDivisorWitness& w = *out.refusal->zero_divisor;
  CHECK(!w.element.is_zero());
  CHECK(!w.partner.is_zero());
  CHECK(multiply(out.working, w.element, w.partner).is_zero());
}

TEST_CASE("recognize refuses matrix and triangular algebras at the right stage") {
  RecognitionOutcome m2 = recognize(builtin("matrix(2,Q)"));
  CHECK(m2.recognized == Tristate::No);
  REQUIRE(m2.refusal);
  CHECK(m2.refusal->stage == Stage::CommutatorRegularity);
  CHECK(m2.refusal->reason == RefusalReason::CommutatorZeroDivisor);
  REQUIRE(m2.squares);
  CHECK(m2.squares->kind == CentralSquaresVerdict::Kind::HoldsSymbolic);
  REQUIRE(m2.refusal->regularity_witness);
  {
    const CommutatorZeroDivisorWitness& w = *m2.refusal->regularity_witness;
    Element v = commutator(m2.working, w.x, w.y);
    CHECK(v == w.v);
    CHECK(!v.is_zero());
    Element prod = w.divisor.left ? multiply(m2.working, w.divisor.element, w.divisor.partner)
                                  : multiply(m2.working, w.divisor.partner, w.divisor.element);
    CHECK(prod.is_zero());
  }

  RecognitionOutcome ut3 = recognize(builtin("upper_triangular(3,Q)"));
  CHECK(ut3.recognized == Tristate::No);
  REQUIRE(ut3.refusal);
  CHECK(ut3.refusal->stage == Stage::CommutatorSquares);
  CHECK(ut3.refusal->reason == RefusalReason::SquaresNotCentral);
  REQUIRE(ut3.refusal->square_witness);
  {
    const CommutatorSquareWitness& w = *ut3.refusal->square_witness;
    Element v = commutator(ut3.working, w.x, w.y);
    CHECK(v == w.v);
    CHECK(!is_central(ut3.working, multiply(ut3.working, v, v)));
  }

  RecognitionOutcome m2f3 = recognize(builtin("matrix(2,F3)"));
  CHECK(m2f3.recognized == Tristate::No);
  REQUIRE(m2f3.refusal);
  CHECK(m2f3.refusal->stage == Stage::CommutatorRegularity);
}

TEST_CASE("characteristic two is refused only after hypothesis checking completes") {
  RecognitionOutcome out = recognize(builtin("matrix(2,F2)"));
  CHECK(out.recognized == Tristate::No);
  REQUIRE(out.refusal);
  CHECK(out.refusal->reason == RefusalReason::CharacteristicTwo);
  CHECK(out.refusal->stage == Stage::Structure);
  // Both hypothesis verdicts are still present: the squares hold, the
  // regularity check found its zero divisor, and neither crashed.
  REQUIRE(out.squares);
  CHECK(out.squares->conclusive_holds());
  REQUIRE(out.regularity);
  CHECK(out.regularity->failed());
  REQUIRE(out.regularity->witness);

  // Same refusal when the squares hypothesis is the one that fails.
  RecognitionOutcome re = recognize(rebased_ut3_f2());
  CHECK(re.recognized == Tristate::No);
  REQUIRE(re.refusal);
  CHECK(re.refusal->reason == RefusalReason::CharacteristicTwo);
  REQUIRE(re.squares);
  CHECK(re.squares->failed());

  // And when only the regularity hypothesis fails on a non-matrix input.
  RecognitionOutcome cyc = recognize(twisted_quartic());
  CHECK(cyc.recognized == Tristate::No);
  REQUIRE(cyc.refusal);
  CHECK(cyc.refusal->reason == RefusalReason::CharacteristicTwo);
  REQUIRE(cyc.squares);
  CHECK(cyc.squares->conclusive_holds());
  REQUIRE(cyc.regularity);
  CHECK(cyc.regularity->failed());
}

TEST_CASE("commutative input is refused at validation") {
  AlgebraPresentation c =
      make_presentation(BaseRing::Q(), {1, 0}, {{{1, 0}, {0, 1}}, {{0, 1}, {2, 0}}}, {"1", "r"});
  RecognitionOutcome out = recognize(c);
  CHECK(out.recognized == Tristate::No);
  REQUIRE(out.refusal);
  CHECK(out.refusal->stage == Stage::Validation);
  CHECK(out.refusal->reason == RefusalReason::Commutative);
}

TEST_SUITE_END();
