#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "base_ring.hpp"

namespace quatrec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// An exact scalar tagged with its base ring. Values are canonical at all
// times: lowest terms with positive denominator over Q, denominator 1 over Z,
// residues in [0, p) over F_p. Mixing rings in arithmetic throws InputError.
class Scalar {
 public:
  Scalar() : ring_(BaseRing::Q()) {}
  explicit Scalar(const BaseRing& ring) : ring_(ring) {}  // zero

  static Scalar of(const BaseRing& ring, long long v);
  static Scalar from_rational(const BaseRing& ring, const Rational& q);

  const BaseRing& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  // Field division; throws over Z and on zero divisors of nothing (x/0).
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

  // Value accessors; only valid for the matching ring kind.
  const Rational& rational_value() const { return q_; }
  std::int64_t residue() const { return r_; }

  // Z -> Q coefficient embedding (identity on Q).
  Scalar lifted_to_rationals() const;

 private:
  void check_same_ring(const Scalar& o) const;

  BaseRing ring_;
  Rational q_;           // payload for Q and Z (denominator 1 over Z)
  std::int64_t r_ = 0;   // payload for F_p, canonical residue
};

// Grammar: Q accepts "-?digits(/-?digits)?", Z accepts "-?digits",
// F_p accepts "digits" (reduced mod p). Anything else throws InputError.
Scalar parse_scalar(const std::string& text, const BaseRing& ring);

}  // namespace quatrec
