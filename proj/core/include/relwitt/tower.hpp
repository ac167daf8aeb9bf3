#pragma once

#include <utility>
#include <vector>

#include "relwitt/ideal.hpp"
#include "relwitt/ring.hpp"

// Maps between the excision ring R (+) I, the double ring D(R, I) and the
// base ring, plus Rees-algebra membership.
namespace relwitt {

RingPtr excision_ring(const RingPtr& base, const Ideal& ideal);
/// Z (+) I for an ideal I of `ambient`.
RingPtr integer_excision_ring(const RingPtr& ambient, const Ideal& ideal);
RingPtr double_ring(const RingPtr& base, const Ideal& ideal);

/// Coefficient ring of a polynomial or Laurent polynomial ring.
RingPtr coefficient_ring(const Ring& ring);

/// Base ring of an excision, double or Rees ring.
RingPtr tower_base(const Ring& ring);
/// Ring containing the defining ideal; differs from the base only for Z (+) I.
RingPtr tower_ideal_ring(const Ring& ring);
const Ideal& tower_ideal(const Ring& ring);

Element excision_element(const RingPtr& ring, const Element& r, const Element& i);
Element double_element(const RingPtr& ring, const Element& a, const Element& b);
std::pair<Element, Element> components(const Element& x);

/// (r,i)(s,j) = (rs, rj + si + ij).
Element excision_mul(const Element& x, const Element& y);

/// (a,b) -> (b, a - b), into the excision ring on the same base and ideal.
Element double_to_excision(const Element& x);
/// (r,i) -> (r + i, r), the inverse of double_to_excision.
Element excision_to_double(const Element& x);

enum class Projection {
  FirstSum,  // (r,i) -> r
  Retract,   // (r,i) -> r + i
};
/// For Z (+) I the retract lands in the ambient ring: (n,i) -> n*1 + i.
Element excision_project(const Element& x, Projection which);
/// r -> (r, 0).
Element excision_section(const RingPtr& excision, const Element& r);

/// Whether the coefficient of t^i lies in I^i for every i >= 1. `p` lives in
/// a polynomial or Laurent ring over I's ring; with `extended` negative
/// powers are unconstrained, otherwise they are rejected.
bool rees_contains(const Ideal& ideal, const Element& p, bool extended);

/// Elements in the ring's fixed enumeration order. Throws InfiniteRing.
std::vector<Element> enumerate_elements(const RingPtr& ring);

}  // namespace relwitt
