#include "scalar.hpp"

#include <cctype>

namespace quatrec {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; p prime, 0 < a < p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return t < 0 ? t + p : t;
}

std::int64_t big_mod(const BigInt& v, std::int64_t p) {
  BigInt r = v % p;
  std::int64_t s = r.convert_to<std::int64_t>();
  return s < 0 ? s + p : s;
}

}  // namespace

Scalar Scalar::of(const BaseRing& ring, long long v) {
  Scalar s(ring);
  if (ring.kind == RingKind::PrimeField)
    s.r_ = mod_reduce(v, ring.p);
  else
    s.q_ = Rational(v);
  return s;
}

Scalar Scalar::from_rational(const BaseRing& ring, const Rational& q) {
  Scalar s(ring);
  switch (ring.kind) {
    case RingKind::Rational:
      s.q_ = q;
      break;
    case RingKind::Integer:
      if (denominator(q) != 1)
        throw InputError("not an integer: " + q.str());
      s.q_ = q;
      break;
    case RingKind::PrimeField: {
      std::int64_t den = big_mod(denominator(q), ring.p);
      if (den == 0)
        throw InputError("denominator divisible by modulus: " + q.str());
      s.r_ = mod_reduce(big_mod(numerator(q), ring.p) * mod_inverse(den, ring.p), ring.p);
      break;
    }
  }
  return s;
}

bool Scalar::is_zero() const {
  return ring_.kind == RingKind::PrimeField ? r_ == 0 : q_ == 0;
}

bool Scalar::is_one() const {
  return ring_.kind == RingKind::PrimeField ? r_ == 1 : q_ == 1;
}

void Scalar::check_same_ring(const Scalar& o) const {
  if (ring_ != o.ring_)
    throw InputError("scalar ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
}

Scalar Scalar::operator-() const {
  Scalar s(ring_);
  if (ring_.kind == RingKind::PrimeField)
    s.r_ = r_ == 0 ? 0 : ring_.p - r_;
  else
    s.q_ = -q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_ring(o);
  if (ring_.kind == RingKind::PrimeField)
    r_ = mod_reduce(r_ + o.r_, ring_.p);
  else
    q_ += o.q_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_ring(o);
  if (ring_.kind == RingKind::PrimeField)
    r_ = mod_reduce(r_ - o.r_, ring_.p);
  else
    q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_ring(o);
  if (ring_.kind == RingKind::PrimeField)
    r_ = mod_reduce(r_ * o.r_, ring_.p);  // p < 2^31 keeps the product in range
  else
    q_ *= o.q_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (!ring_.is_field())
    throw InputError("division requires a field; lift Z coefficients to Q first");
  if (is_zero())
    throw InputError("division by zero");
  Scalar s(ring_);
  if (ring_.kind == RingKind::PrimeField)
    s.r_ = mod_inverse(r_, ring_.p);
  else
    s.q_ = Rational(1) / q_;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_ring(o);
  return *this * o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_ring(b);
  return a.ring_.kind == RingKind::PrimeField ? a.r_ == b.r_ : a.q_ == b.q_;
}

std::string Scalar::to_string() const {
  if (ring_.kind == RingKind::PrimeField) return std::to_string(r_);
  if (denominator(q_) == 1) return numerator(q_).str();
  return numerator(q_).str() + "/" + denominator(q_).str();
}

Scalar Scalar::lifted_to_rationals() const {
  if (ring_.kind == RingKind::PrimeField)
    throw InputError("cannot lift prime-field residues to Q");
  return Scalar::from_rational(BaseRing::Q(), q_);
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// "-?digits"; returns false on grammar violation.
bool parse_int_part(const std::string& s, BigInt& out) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && body[0] == '-') {
    neg = true;
    body = body.substr(1);
  }
  if (!all_digits(body)) return false;
  out = BigInt(body);
  if (neg) out = -out;
  return true;
}

}  // namespace

Scalar parse_scalar(const std::string& text, const BaseRing& ring) {
  if (ring.kind == RingKind::PrimeField) {
    if (!all_digits(text))
      throw InputError("bad residue '" + text + "' over " + ring.name());
    return Scalar::from_rational(ring, Rational(BigInt(text)));
  }

  std::string num_part = text, den_part;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    if (ring.kind == RingKind::Integer)
      throw InputError("bad integer '" + text + "' over Z");
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
  }

  BigInt num, den = 1;
  if (!parse_int_part(num_part, num))
    throw InputError("bad scalar '" + text + "' over " + ring.name());
  if (!den_part.empty() || text.find('/') != std::string::npos) {
    if (!parse_int_part(den_part, den))
      throw InputError("bad scalar '" + text + "' over " + ring.name());
    if (den == 0)
      throw InputError("zero denominator in '" + text + "'");
  }

  return Scalar::from_rational(ring, Rational(num) / Rational(den));
}

}  // namespace quatrec
