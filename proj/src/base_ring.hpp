#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace quatrec {

enum class RingKind { Rational, Integer, PrimeField };

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Coefficient domain of a presentation: Q, Z, or F_p with p prime.
// p is capped below 2^31 so residue products stay inside int64.
struct BaseRing {
  RingKind kind = RingKind::Rational;
  std::int64_t p = 0;

  static BaseRing Q() { return {RingKind::Rational, 0}; }
  static BaseRing Z() { return {RingKind::Integer, 0}; }
  static BaseRing Fp(std::int64_t p) {
    if (p >= (std::int64_t(1) << 31))
      throw InputError("prime modulus too large: " + std::to_string(p));
    if (!is_prime(p))
      throw InputError("modulus is not prime: " + std::to_string(p));
    return {RingKind::PrimeField, p};
  }

  bool is_field() const { return kind != RingKind::Integer; }
  std::int64_t characteristic() const { return kind == RingKind::PrimeField ? p : 0; }

  std::string name() const {
    switch (kind) {
      case RingKind::Rational: return "Q";
      case RingKind::Integer: return "Z";
      case RingKind::PrimeField: return "F" + std::to_string(p);
    }
    return "?";
  }

  friend bool operator==(const BaseRing&, const BaseRing&) = default;
};

}  // namespace quatrec
