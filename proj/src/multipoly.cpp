#include "multipoly.hpp"

#include <stdexcept>

#include "errors.hpp"

namespace quatrec {

MultiPoly MultiPoly::variable(const BaseRing& ring, std::size_t nvars, std::size_t idx) {
  if (idx >= nvars) throw std::logic_error("variable index out of range");
  MultiPoly p(ring, nvars);
  Exponents e(nvars, 0);
  e[idx] = 1;
  p.add_term(e, Scalar::of(ring, 1));
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != nvars_) throw std::logic_error("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::logic_error("polynomial variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::add_scaled(const MultiPoly& o, const Scalar& c) {
  if (o.nvars_ != nvars_) throw std::logic_error("polynomial variable counts differ");
  if (c.is_zero()) return *this;
  for (const auto& [e, coeff] : o.terms_) add_term(e, coeff * c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (o.nvars_ != nvars_) throw std::logic_error("polynomial variable counts differ");
  MultiPoly out(ring_, nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has wrong length");
  Scalar acc = Scalar::of(ring_, 0);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term = term * point[i];
    }
    acc = acc + term;
  }
  return acc;
}

void MultiPoly::reduce_exponents_for_field() {
  if (ring_.kind != RingKind::PrimeField) return;
  const unsigned p = static_cast<unsigned>(ring_.p);
  std::map<Exponents, Scalar> reduced;
  for (const auto& [e, c] : terms_) {
    Exponents r = e;
    for (auto& exp : r) {
      while (exp >= p) exp -= (p - 1);
    }
    auto it = reduced.find(r);
    if (it == reduced.end()) {
      reduced.emplace(r, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) reduced.erase(it);
    }
  }
  terms_ = std::move(reduced);
}

}  // namespace quatrec
