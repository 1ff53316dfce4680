#include <string>

#include "builtin.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "fraction.hpp"
#include "helpers.hpp"

using namespace quatrec;

namespace {

qt::Element central(const AlgebraPresentation& a, long long m) {
  return scale(Scalar::of(a.base, m), a.unit);
}

}  // namespace

TEST_SUITE_BEGIN("localization");

TEST_CASE("fractions over the integer quaternions follow the usual rules") {
  AlgebraPresentation a = builtin("lipschitz");
  Fraction f = make_fraction(a, a.basis(1), central(a, 2));  // i / 2
  Fraction g = make_fraction(a, a.basis(2), central(a, 3));  // j / 3

  Fraction sum = fraction_add(a, f, g);
  CHECK(sum.num == elem(a, {0, 3, 2, 0}));  // (3i + 2j) / 6
  CHECK(sum.den == central(a, 6));
  CHECK(fraction_eq(a, sum, make_fraction(a, elem(a, {0, 3, 2, 0}), central(a, 6))));

  Fraction prod = fraction_mul(a, f, g);
  CHECK(prod.num == a.basis(3));  // k / 6
  CHECK(prod.den == central(a, 6));

  CHECK(fraction_eq(a, make_fraction(a, scale(Scalar::of(a.base, 2), a.basis(1)), central(a, 2)),
                    embed_fraction(a, a.basis(1))));
  CHECK(!fraction_eq(a, make_fraction(a, a.unit, central(a, 2)),
                     make_fraction(a, a.unit, central(a, 3))));

  std::string text = render_fraction(a, sum);
  CHECK(text.find('/') != std::string::npos);
}

TEST_CASE("denominators must be central and non-zero") {
  AlgebraPresentation a = builtin("lipschitz");
  CHECK_THROWS_AS((void)make_fraction(a, a.unit, a.zero()), InputError);
  CHECK_THROWS_AS((void)make_fraction(a, a.unit, a.basis(1)), InputError);
}

TEST_CASE("fraction equality is an equivalence compatible with + and *") {
  AlgebraPresentation a = builtin("lipschitz");
  Rng rng(31);
  for (int it = 0; it < 500; ++it) {
    Element x = random_element(a, rng, 9);
    Element y = random_element(a, rng, 9);
    long long c = rng.uniform_int(1, 9);
    long long d = rng.uniform_int(1, 9);
    long long lam = rng.uniform_int(1, 9);
    long long mu = rng.uniform_int(1, 9);
    long long nu = rng.uniform_int(1, 9);

    Fraction f = make_fraction(a, x, central(a, c));
    Fraction g = make_fraction(a, y, central(a, d));
    // The same quotients over rescaled representatives.
    Fraction f2 = make_fraction(a, scale(Scalar::of(a.base, lam), x), central(a, lam * c));
    Fraction f3 =
        make_fraction(a, scale(Scalar::of(a.base, lam * nu), x), central(a, lam * nu * c));
    Fraction g2 = make_fraction(a, scale(Scalar::of(a.base, mu), y), central(a, mu * d));

    CHECK(fraction_eq(a, f, f));            // reflexive
    CHECK(fraction_eq(a, f, f2));           // rescaling is invisible
    CHECK(fraction_eq(a, f2, f));           // symmetric
    CHECK(fraction_eq(a, f2, f3));
    CHECK(fraction_eq(a, f, f3));           // transitive across the chain

    CHECK(fraction_eq(a, fraction_add(a, f, g), fraction_add(a, f2, g2)));
    CHECK(fraction_eq(a, fraction_mul(a, f, g), fraction_mul(a, f2, g2)));
  }
}

TEST_CASE("the embedding is an injective ring homomorphism") {
  AlgebraPresentation a = builtin("lipschitz");
  Rng rng(37);
  for (int it = 0; it < 200; ++it) {
    Element r = random_element(a, rng, 9);
    Element s = random_element(a, rng, 9);
    CHECK(fraction_eq(a, embed_fraction(a, r + s),
                      fraction_add(a, embed_fraction(a, r), embed_fraction(a, s))));
    CHECK(fraction_eq(a, embed_fraction(a, multiply(a, r, s)),
                      fraction_mul(a, embed_fraction(a, r), embed_fraction(a, s))));
    if (!(r == s)) CHECK(!fraction_eq(a, embed_fraction(a, r), embed_fraction(a, s)));
  }
  CHECK(fraction_eq(a, embed_fraction(a, a.unit),
                    make_fraction(a, central(a, 7), central(a, 7))));
}

TEST_SUITE_END();
