#pragma once

#include "algebra.hpp"

namespace quatrec {

// Generalized quaternion algebra over `base` with i^2 = a, j^2 = b, ij = k = -ji.
// Full basis is {1, i, j, k}; the remaining products follow by associativity
// (ik = a j, ki = -a j, jk = -b i, kj = b i, k^2 = -a b).
AlgebraPresentation make_quaternion(const Scalar& a, const Scalar& b, const BaseRing& base);

// Full n x n matrix algebra; basis E_rc in row-major order.
AlgebraPresentation make_matrix_algebra(std::size_t n, const BaseRing& base);

// Upper-triangular n x n matrices; basis E_rc with r <= c, row-major.
AlgebraPresentation make_upper_triangular(std::size_t n, const BaseRing& base);

// A with a central square root of d adjoined: dimension doubles, the new
// basis vectors are t*e_s with t central and t^2 = d.
AlgebraPresentation make_quadratic_extension_tensor(const AlgebraPresentation& a, const Scalar& d);

// Integer quaternions: quaternion(-1, -1, Z).
AlgebraPresentation make_lipschitz();

// Textual constructor used by the CLI `examples` command:
//   hamilton | lipschitz | quaternion(a,b,BASE) | matrix(n,BASE) |
//   upper_triangular(n,BASE) | quadratic_extension(DESC,d)
// with BASE one of Q, Z, F<p>.
AlgebraPresentation builtin(const std::string& descriptor);

}  // namespace quatrec
