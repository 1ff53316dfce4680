#include "doctest.h"
#include "helpers.hpp"
#include "scalar.hpp"

using namespace quatrec;

TEST_SUITE_BEGIN("scalar");

TEST_CASE("parse over Q keeps lowest terms with positive denominator") {
  CHECK(parse_scalar("3/4", BaseRing::Q()).to_string() == "3/4");
  CHECK(parse_scalar("2/-4", BaseRing::Q()).to_string() == "-1/2");
  CHECK(parse_scalar("-6/4", BaseRing::Q()).to_string() == "-3/2");
  CHECK(parse_scalar("0/7", BaseRing::Q()).to_string() == "0");
  CHECK(parse_scalar("12/4", BaseRing::Q()).to_string() == "3");
}

TEST_CASE("parse over F_p reduces residues") {
  const BaseRing f5 = BaseRing::Fp(5);
  CHECK(parse_scalar("7", f5).residue() == 2);
  CHECK(parse_scalar("0", f5).residue() == 0);
  CHECK(parse_scalar("123456789123", f5).residue() == 123456789123LL % 5);
}

TEST_CASE("parse rejects grammar violations") {
  CHECK_THROWS_AS(parse_scalar("1/0", BaseRing::Q()), InputError);
  CHECK_THROWS_AS(parse_scalar("", BaseRing::Q()), InputError);
  CHECK_THROWS_AS(parse_scalar("x", BaseRing::Q()), InputError);
  CHECK_THROWS_AS(parse_scalar("1.5", BaseRing::Q()), InputError);
  CHECK_THROWS_AS(parse_scalar("1/2", BaseRing::Z()), InputError);
  CHECK_THROWS_AS(parse_scalar("-3", BaseRing::Fp(5)), InputError);
  CHECK_THROWS_AS(parse_scalar("1/2/3", BaseRing::Q()), InputError);
  CHECK_THROWS_AS(parse_scalar(" 1", BaseRing::Q()), InputError);
}

TEST_CASE("non-prime modulus is rejected") {
  CHECK_THROWS_AS(BaseRing::Fp(6), InputError);
  CHECK_THROWS_AS(BaseRing::Fp(1), InputError);
  CHECK_NOTHROW(BaseRing::Fp(2));
  CHECK_NOTHROW(BaseRing::Fp(2147483647));
}

TEST_CASE("print then parse is the identity") {
  for (const char* s : {"3/4", "-17", "0", "22/7", "-1/2"}) {
    Scalar v = parse_scalar(s, BaseRing::Q());
    CHECK(parse_scalar(v.to_string(), BaseRing::Q()) == v);
  }
  const BaseRing f7 = BaseRing::Fp(7);
  for (int r = 0; r < 7; ++r) {
    Scalar v = Scalar::of(f7, r);
    CHECK(parse_scalar(v.to_string(), f7) == v);
  }
}

TEST_CASE("field axioms hold on sampled values") {
  Rng rng(7);
  auto sample_q = [&] {
    return Scalar::from_rational(BaseRing::Q(),
                                 Rational(rng.uniform_int(-50, 50)) /
                                     Rational(rng.uniform_int(1, 20)));
  };
  const BaseRing f7 = BaseRing::Fp(7);
  auto sample_f = [&] { return Scalar::of(f7, rng.uniform_int(0, 6)); };

  for (int it = 0; it < 200; ++it) {
    for (int kind = 0; kind < 2; ++kind) {
      Scalar a = kind ? sample_f() : sample_q();
      Scalar b = kind ? sample_f() : sample_q();
      Scalar c = kind ? sample_f() : sample_q();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar(a.ring()));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Scalar::of(a.ring(), 1));
        CHECK(b / a * a == b);
      }
    }
  }
}

TEST_CASE("integer ring refuses division and lifts to Q") {
  const BaseRing z = BaseRing::Z();
  Scalar a = Scalar::of(z, 6), b = Scalar::of(z, -4);
  CHECK((a * b).to_string() == "-24");
  CHECK_THROWS_AS(a / b, InputError);
  CHECK_THROWS_AS(a.inverse(), InputError);
  Scalar lifted = a.lifted_to_rationals();
  CHECK(lifted.ring() == BaseRing::Q());
  CHECK(lifted == Q(6));
}

TEST_CASE("ring mixing is rejected") {
  CHECK_THROWS_AS(Q(1) + Scalar::of(BaseRing::Fp(5), 1), InputError);
  CHECK_THROWS_AS(Scalar::of(BaseRing::Fp(5), 1) == Scalar::of(BaseRing::Fp(7), 1), InputError);
}

TEST_SUITE_END();
