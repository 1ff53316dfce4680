#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"
#include "tristate.hpp"

namespace quatrec {

// A place of Q: the archimedean one, or a finite prime.
struct Place {
  bool infinite = false;
  std::int64_t p = 0;

  static Place at_infinity() { return Place{true, 0}; }
  static Place at_prime(std::int64_t q) { return Place{false, q}; }
  std::string name() const { return infinite ? "infinity" : std::to_string(p); }
};

// Reduced norm of w + x i + y j + z k in the algebra with i^2 = a, j^2 = b:
// w^2 - a x^2 - b y^2 + a b z^2.
Rational quaternion_norm(const Rational& a, const Rational& b, const std::array<Rational, 4>& v);

// Hilbert symbol (a, b) at the given place, in {-1, +1}; a and b non-zero.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

struct DivisionVerdict {
  Tristate division = Tristate::Unknown;
  std::pair<Rational, Rational> form{0, 0};
  // Every place inspected (infinity, 2, and the odd primes in the support of
  // the form parameters) with its symbol.
  std::vector<std::pair<std::string, int>> evidence;
  std::optional<std::array<long long, 4>> isotropic;
  std::string note;
};

// Decides whether the quaternion algebra (a, b / Q) is a division algebra:
// yes iff some local symbol is -1 (iff the norm form is anisotropic).  For a
// split algebra the verdict carries a primitive isotropic vector, found by
// escalating the search height through 10, 100, 1000.
DivisionVerdict is_division(const Rational& a, const Rational& b);

// First isotropic vector of the norm form with non-negative entries (the form
// is even in each variable) in the documented deterministic order, primitive,
// or nullopt if none exists up to the height bound.  Heights <= 120 use a
// shell-by-shell direct scan; larger bounds switch to a two-half table join
// with its own (documented) first-hit order.
std::optional<std::array<long long, 4>> isotropy_search(const Rational& a, const Rational& b,
                                                        long long bound);

}  // namespace quatrec
