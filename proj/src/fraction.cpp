#include "fraction.hpp"

#include "center.hpp"
#include "errors.hpp"

namespace quatrec {

Fraction make_fraction(const AlgebraPresentation& a, Element num, Element den) {
  if (den.is_zero()) throw InputError("fraction denominator is zero");
  if (!is_central(a, den)) throw InputError("fraction denominator is not central");
  return Fraction{std::move(num), std::move(den)};
}

Fraction embed_fraction(const AlgebraPresentation& a, const Element& r) {
  return Fraction{r, a.unit};
}

bool fraction_eq(const AlgebraPresentation& a, const Fraction& f, const Fraction& g) {
  return multiply(a, g.den, f.num) == multiply(a, f.den, g.num);
}

Fraction fraction_add(const AlgebraPresentation& a, const Fraction& f, const Fraction& g) {
  Element num = multiply(a, g.den, f.num) + multiply(a, f.den, g.num);
  return make_fraction(a, std::move(num), multiply(a, f.den, g.den));
}

Fraction fraction_mul(const AlgebraPresentation& a, const Fraction& f, const Fraction& g) {
  return make_fraction(a, multiply(a, f.num, g.num), multiply(a, f.den, g.den));
}

std::string render_fraction(const AlgebraPresentation& a, const Fraction& f) {
  return "(" + render_element(a, f.num) + ") / (" + render_element(a, f.den) + ")";
}

}  // namespace quatrec
