#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "scalar.hpp"

namespace quatrec {

// Sparse multivariate polynomial: exponent vector -> coefficient, kept
// canonical (no zero coefficients, fixed variable count, terms ordered by the
// map's lexicographic comparison on exponent vectors).
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  MultiPoly(const BaseRing& ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {}

  static MultiPoly variable(const BaseRing& ring, std::size_t nvars, std::size_t idx);

  const BaseRing& ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Scalar& c);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& add_scaled(const MultiPoly& o, const Scalar& c);
  MultiPoly operator*(const MultiPoly& o) const;

  Scalar evaluate(const std::vector<Scalar>& point) const;

  // Over F_p, x^p and x define the same function; reduce every exponent into
  // [1, p-1] via e -> e - (p-1) so that "zero polynomial" coincides with
  // "zero function" (per-variable degree < p afterwards).
  void reduce_exponents_for_field();

 private:
  BaseRing ring_;
  std::size_t nvars_;
  std::map<Exponents, Scalar> terms_;
};

}  // namespace quatrec
