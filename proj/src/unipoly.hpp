#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace quatrec {

// Dense univariate polynomial over Q: coeffs[i] is the coefficient of x^i,
// normalized so that the leading coefficient is non-zero (empty == zero).
using QPoly = std::vector<Rational>;

QPoly qpoly_trim(QPoly f);
Rational qpoly_eval(const QPoly& f, const Rational& x);
// Divide by (x - r); the remainder must vanish.
QPoly qpoly_divide_linear(const QPoly& f, const Rational& r);

struct RationalRootScan {
  std::optional<Rational> root;
  bool exhaustive;  // false when coefficient divisors were too large to enumerate
};

// Deterministic rational-root search via the p/q divisor criterion.  Candidate
// order: denominators ascending, numerators ascending, +/-.  Gives up (without
// claiming rootlessness) when the constant or leading coefficient exceeds the
// divisor-enumeration budget.
RationalRootScan qpoly_rational_root(const QPoly& f);

// Dense univariate polynomial over F_p with int64 residues in [0, p).
using FpPoly = std::vector<std::int64_t>;

FpPoly fp_poly_trim(FpPoly f);
FpPoly fp_poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, std::int64_t p);
FpPoly fp_poly_gcd(FpPoly a, FpPoly b, std::int64_t p);
// x^(p^k) mod f, computed by k successive p-th powers.
FpPoly fp_poly_frobenius_power(const FpPoly& f, std::int64_t p, unsigned k);

// Rabin's test: f (monic after normalization, degree >= 1) is irreducible over
// F_p iff x^(p^m) == x (mod f) and gcd(x^(p^(m/q)) - x, f) = 1 for every prime
// q dividing m.
bool fp_poly_irreducible(FpPoly f, std::int64_t p);

// For reducible monic f, produce a nontrivial monic factor pair (g, f/g) via
// distinct-degree splitting: the first d with a nontrivial gcd(x^(p^d) - x, f).
std::optional<std::pair<FpPoly, FpPoly>> fp_poly_factor_split(FpPoly f, std::int64_t p);

// Reduce a rational-coefficient polynomial mod p; nullopt when a denominator
// vanishes mod p or the reduction drops the degree.
std::optional<FpPoly> qpoly_reduce_mod(const QPoly& f, std::int64_t p);

}  // namespace quatrec
