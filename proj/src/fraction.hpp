#pragma once

#include <string>

#include "algebra.hpp"

namespace quatrec {

// Formal quotient x / c over a presentation, with c central and non-zero.
// Two quotients are identified when they cross-multiply equal; arithmetic
// follows the usual fraction rules with central denominators.
struct Fraction {
  Element num;
  Element den;
};

Fraction make_fraction(const AlgebraPresentation& a, Element num, Element den);
Fraction embed_fraction(const AlgebraPresentation& a, const Element& r);

// x/c == y/d  iff  d x == c y.
bool fraction_eq(const AlgebraPresentation& a, const Fraction& f, const Fraction& g);
// x/c + y/d == (d x + c y) / (c d).
Fraction fraction_add(const AlgebraPresentation& a, const Fraction& f, const Fraction& g);
// (x/c)(y/d) == (x y) / (c d).
Fraction fraction_mul(const AlgebraPresentation& a, const Fraction& f, const Fraction& g);

std::string render_fraction(const AlgebraPresentation& a, const Fraction& f);

}  // namespace quatrec
