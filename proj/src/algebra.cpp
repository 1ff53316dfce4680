#include "algebra.hpp"

namespace quatrec {

namespace {

void check_dims(const Element& a, const Element& b) {
  if (a.coords.size() != b.coords.size()) throw InputError("element dimension mismatch");
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  check_dims(a, b);
  Element r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Element operator-(const Element& a, const Element& b) {
  check_dims(a, b);
  Element r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Element operator-(const Element& a) {
  Element r = a;
  for (Scalar& c : r.coords) c = -c;
  return r;
}

Element scale(const Scalar& s, const Element& a) {
  Element r = a;
  for (Scalar& c : r.coords) c *= s;
  return r;
}

Element AlgebraPresentation::basis(std::size_t s) const {
  Element e = zero();
  e.coords[s] = Scalar::of(base, 1);
  return e;
}

Element multiply(const AlgebraPresentation& a, const Element& x, const Element& y) {
  if (x.coords.size() != a.dim || y.coords.size() != a.dim)
    throw InputError("element does not match presentation dimension");
  Element out = a.zero();
  for (std::size_t s = 0; s < a.dim; ++s) {
    if (x.coords[s].is_zero()) continue;
    for (std::size_t t = 0; t < a.dim; ++t) {
      if (y.coords[t].is_zero()) continue;
      const Scalar c = x.coords[s] * y.coords[t];
      const Element& prod = a.table[s][t];
      for (std::size_t u = 0; u < a.dim; ++u)
        if (!prod.coords[u].is_zero()) out.coords[u] += c * prod.coords[u];
    }
  }
  return out;
}

Element commutator(const AlgebraPresentation& a, const Element& x, const Element& y) {
  return multiply(a, x, y) - multiply(a, y, x);
}

bool is_commutative(const AlgebraPresentation& a) {
  for (std::size_t s = 0; s < a.dim; ++s)
    for (std::size_t t = s + 1; t < a.dim; ++t)
      if (a.table[s][t] != a.table[t][s]) return false;
  return true;
}

ValidationReport validate(const AlgebraPresentation& a) {
  ValidationReport rep;
  if (a.dim == 0 || a.table.size() != a.dim || a.unit.coords.size() != a.dim)
    throw InputError("presentation has inconsistent dimensions");
  for (const auto& row : a.table) {
    if (row.size() != a.dim) throw InputError("presentation has inconsistent dimensions");
    for (const Element& e : row)
      if (e.coords.size() != a.dim) throw InputError("presentation has inconsistent dimensions");
  }

  for (std::size_t s = 0; s < a.dim && rep.unital; ++s) {
    const Element e = a.basis(s);
    if (multiply(a, a.unit, e) != e || multiply(a, e, a.unit) != e) {
      rep.unital = false;
      rep.failing_unit_index = s;
    }
  }

  for (std::size_t s = 0; s < a.dim && rep.associative; ++s)
    for (std::size_t t = 0; t < a.dim && rep.associative; ++t)
      for (std::size_t u = 0; u < a.dim; ++u) {
        const Element left = multiply(a, a.table[s][t], a.basis(u));
        const Element right = multiply(a, a.basis(s), a.table[t][u]);
        if (left != right) {
          rep.associative = false;
          rep.failing_triple = {{s, t, u}};
          break;
        }
      }

  rep.commutative = is_commutative(a);
  return rep;
}

AlgebraPresentation lift_to_rationals(const AlgebraPresentation& a) {
  if (a.base.kind == RingKind::Rational) return a;
  if (a.base.kind == RingKind::PrimeField)
    throw InputError("cannot lift a prime-field presentation to Q");
  AlgebraPresentation out;
  out.base = BaseRing::Q();
  out.dim = a.dim;
  out.names = a.names;
  auto lift_elem = [&](const Element& e) {
    Element r;
    r.coords.reserve(e.coords.size());
    for (const Scalar& c : e.coords) r.coords.push_back(c.lifted_to_rationals());
    return r;
  };
  out.unit = lift_elem(a.unit);
  out.table.resize(a.dim);
  for (std::size_t s = 0; s < a.dim; ++s) {
    out.table[s].reserve(a.dim);
    for (std::size_t t = 0; t < a.dim; ++t) out.table[s].push_back(lift_elem(a.table[s][t]));
  }
  return out;
}

std::string render_element(const AlgebraPresentation& a, const Element& x) {
  std::string out;
  for (std::size_t s = 0; s < a.dim; ++s) {
    const Scalar& c = x.coords[s];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    const std::string& name = a.names.size() == a.dim ? a.names[s] : "e" + std::to_string(s);
    std::string term;
    if (name == "1")
      term = cs;
    else if (cs == "1")
      term = name;
    else
      term = cs + "*" + name;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace quatrec
