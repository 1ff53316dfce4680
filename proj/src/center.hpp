#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "tristate.hpp"

namespace quatrec {

// element * partner == 0 when left, partner * element == 0 otherwise; both
// factors are non-zero and the product is re-verified before returning.
struct ZeroDivisorWitness {
  Element element;
  Element partner;
  bool left = true;
};

// Non-empty result means v (non-zero) kills something on the left or right.
std::optional<ZeroDivisorWitness> is_zero_divisor(const AlgebraPresentation& a, const Element& v);

bool is_central(const AlgebraPresentation& a, const Element& v);

// Coordinates of v in the linear span of the given elements, if it lies there.
std::optional<std::vector<Scalar>> coordinates_in_span(const AlgebraPresentation& a,
                                                       const std::vector<Element>& span,
                                                       const Element& v);

std::size_t rank_of_elements(const AlgebraPresentation& a, const std::vector<Element>& elems);

// Two-sided inverse of a central element, when one exists.
std::optional<Element> central_inverse(const AlgebraPresentation& a, const Element& c);

struct CenterBasis {
  std::vector<Element> elements;
  Tristate field = Tristate::Unknown;
  std::string field_note;
  // Populated when field == No: a central element together with its
  // annihilator partner.
  std::optional<ZeroDivisorWitness> obstruction;

  std::size_t rank() const { return elements.size(); }
};

// Basis of {z : ze_s == e_s z for all s} as the kernel of the stacked
// commutator maps, plus a decision procedure for whether that subring is a
// field.  Requires a field base ring (lift integer presentations first).
CenterBasis center_basis(const AlgebraPresentation& a);

}  // namespace quatrec
