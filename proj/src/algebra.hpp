#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"

namespace quatrec {

// Element of a finite-rank algebra, as coordinates over the basis of its
// presentation. Addition is coordinatewise; products need the presentation.
struct Element {
  std::vector<Scalar> coords;

  bool is_zero() const {
    for (const Scalar& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Element&, const Element&) = default;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element scale(const Scalar& s, const Element& a);

// Structure-constant presentation: an n-dimensional unital associative
// algebra given by the products of basis elements. table[s][t] holds the
// coordinates of e_s * e_t.
struct AlgebraPresentation {
  BaseRing base;
  std::size_t dim = 0;
  Element unit;
  std::vector<std::vector<Element>> table;
  std::vector<std::string> names;

  Element zero() const { return Element{std::vector<Scalar>(dim, Scalar(base))}; }
  Element basis(std::size_t s) const;
  Element scalar_multiple_of_unit(const Scalar& s) const { return scale(s, unit); }
  const Element& product(std::size_t s, std::size_t t) const { return table[s][t]; }

  friend bool operator==(const AlgebraPresentation&, const AlgebraPresentation&) = default;
};

Element multiply(const AlgebraPresentation& a, const Element& x, const Element& y);
Element commutator(const AlgebraPresentation& a, const Element& x, const Element& y);

bool is_commutative(const AlgebraPresentation& a);

struct ValidationReport {
  bool associative = true;
  std::optional<std::array<std::size_t, 3>> failing_triple;
  bool unital = true;
  std::optional<std::size_t> failing_unit_index;
  bool commutative = false;
  bool ok() const { return associative && unital; }
};

// Checks all n^3 associativity triples on basis elements (enough by
// bilinearity) and both unit laws on every basis element.
ValidationReport validate(const AlgebraPresentation& a);

// Z -> Q coefficient embedding; identity on Q presentations.
AlgebraPresentation lift_to_rationals(const AlgebraPresentation& a);

// Pretty form like "2 + i - 3*k" using the presentation's basis names.
std::string render_element(const AlgebraPresentation& a, const Element& x);

}  // namespace quatrec
