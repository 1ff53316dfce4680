#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "rng.hpp"
#include "scalar.hpp"

namespace qt = quatrec;

inline qt::Scalar Q(const std::string& s) { return qt::parse_scalar(s, qt::BaseRing::Q()); }
inline qt::Scalar Q(long long v) { return qt::Scalar::of(qt::BaseRing::Q(), v); }

inline qt::Element elem(const qt::AlgebraPresentation& a, std::initializer_list<long long> cs) {
  qt::Element e = a.zero();
  std::size_t i = 0;
  for (long long c : cs) e.coords[i++] = qt::Scalar::of(a.base, c);
  return e;
}

inline qt::Element elem_q(const qt::AlgebraPresentation& a, std::initializer_list<const char*> cs) {
  qt::Element e = a.zero();
  std::size_t i = 0;
  for (const char* c : cs) e.coords[i++] = qt::parse_scalar(c, a.base);
  return e;
}

// Presentation from integer structure constants: prods[s][t][u] is the
// coefficient of e_u in e_s * e_t.
inline qt::AlgebraPresentation make_presentation(
    const qt::BaseRing& base, std::initializer_list<long long> unit,
    const std::vector<std::vector<std::vector<long long>>>& prods,
    std::vector<std::string> names) {
  qt::AlgebraPresentation a;
  a.base = base;
  a.dim = prods.size();
  a.names = std::move(names);
  a.table.assign(a.dim, std::vector<qt::Element>(a.dim));
  for (std::size_t s = 0; s < a.dim; ++s)
    for (std::size_t t = 0; t < a.dim; ++t) {
      qt::Element e = a.zero();
      for (std::size_t u = 0; u < a.dim; ++u) e.coords[u] = qt::Scalar::of(base, prods[s][t][u]);
      a.table[s][t] = e;
    }
  a.unit = a.zero();
  std::size_t i = 0;
  for (long long c : unit) a.unit.coords[i++] = qt::Scalar::of(base, c);
  return a;
}

// The same algebra presented over the re-ordered basis f_s = e_{perm[s]}.
inline qt::AlgebraPresentation permute_basis(const qt::AlgebraPresentation& a,
                                             const std::vector<std::size_t>& perm) {
  qt::AlgebraPresentation b;
  b.base = a.base;
  b.dim = a.dim;
  b.names.resize(a.dim);
  for (std::size_t s = 0; s < a.dim; ++s) b.names[s] = a.names[perm[s]];
  auto convert = [&](const qt::Element& e) {
    qt::Element r = b.zero();
    for (std::size_t u = 0; u < a.dim; ++u) r.coords[u] = e.coords[perm[u]];
    return r;
  };
  b.table.assign(a.dim, std::vector<qt::Element>(a.dim));
  for (std::size_t s = 0; s < a.dim; ++s)
    for (std::size_t t = 0; t < a.dim; ++t) b.table[s][t] = convert(a.table[perm[s]][perm[t]]);
  b.unit = convert(a.unit);
  return b;
}

// Random element with integer coordinates of |height| at most h.
inline qt::Element random_element(const qt::AlgebraPresentation& a, qt::Rng& rng, long long h) {
  qt::Element e = a.zero();
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (a.base.kind == qt::RingKind::PrimeField)
      e.coords[i] = qt::Scalar::of(a.base, rng.uniform_int(0, a.base.p - 1));
    else
      e.coords[i] = qt::Scalar::of(a.base, rng.uniform_int(-h, h));
  }
  return e;
}
