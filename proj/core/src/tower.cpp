#include "relwitt/tower.hpp"

#include "rings_impl.hpp"

namespace relwitt {

namespace {

const detail::ExcisionRing& as_excision(const Ring& ring) {
  if (ring.kind() != RingKind::Excision) fail(ErrorCode::RingMismatch, "expected an excision ring, got " + ring.key());
  return static_cast<const detail::ExcisionRing&>(ring);
}

const detail::DoubleRing& as_double(const Ring& ring) {
  if (ring.kind() != RingKind::Double) fail(ErrorCode::RingMismatch, "expected a double ring, got " + ring.key());
  return static_cast<const detail::DoubleRing&>(ring);
}

}  // namespace

RingPtr excision_ring(const RingPtr& base, const Ideal& ideal) {
  require_same_ring(*base, *ideal.ring(), "excision ring");
  return make_ring(RingSpec::excision(base->spec(), ideal.generator_strings()));
}

RingPtr integer_excision_ring(const RingPtr& ambient, const Ideal& ideal) {
  require_same_ring(*ambient, *ideal.ring(), "excision ring");
  return make_ring(RingSpec::integer_excision(ambient->spec(), ideal.generator_strings()));
}

RingPtr double_ring(const RingPtr& base, const Ideal& ideal) {
  require_same_ring(*base, *ideal.ring(), "double ring");
  return make_ring(RingSpec::double_ring(base->spec(), ideal.generator_strings()));
}

RingPtr coefficient_ring(const Ring& ring) {
  if (ring.kind() == RingKind::Polynomial) return static_cast<const detail::PolynomialRing&>(ring).base();
  if (ring.kind() == RingKind::Laurent) return static_cast<const detail::LaurentRing&>(ring).base();
  fail(ErrorCode::RingMismatch, "expected a polynomial ring, got " + ring.key());
}

RingPtr tower_base(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Excision: return as_excision(ring).base();
    case RingKind::Double: return as_double(ring).base();
    case RingKind::Rees:
    case RingKind::ExtendedRees: return static_cast<const detail::ReesRing&>(ring).base();
    default: fail(ErrorCode::RingMismatch, "ring has no tower base: " + ring.key());
  }
}

RingPtr tower_ideal_ring(const Ring& ring) {
  if (ring.kind() == RingKind::Excision) return as_excision(ring).ideal_ring();
  return tower_base(ring);
}

const Ideal& tower_ideal(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Excision: return as_excision(ring).ideal();
    case RingKind::Double: return as_double(ring).ideal();
    case RingKind::Rees:
    case RingKind::ExtendedRees: return static_cast<const detail::ReesRing&>(ring).ideal();
    default: fail(ErrorCode::RingMismatch, "ring has no defining ideal: " + ring.key());
  }
}

Element excision_element(const RingPtr& ring, const Element& r, const Element& i) {
  const auto& ex = as_excision(*ring);
  require_same_ring(*ex.base(), *r.ring(), "excision element");
  require_same_ring(*ex.ideal_ring(), *i.ring(), "excision element");
  if (!ex.ideal().contains(i.value())) fail(ErrorCode::MalformedSpec, "second component is not in the ideal");
  return {ring, ex.make(r.value(), i.value())};
}

Element double_element(const RingPtr& ring, const Element& a, const Element& b) {
  const auto& d = as_double(*ring);
  require_same_ring(*d.base(), *a.ring(), "double element");
  require_same_ring(*d.base(), *b.ring(), "double element");
  if (!d.ideal().contains((a - b).value())) fail(ErrorCode::MalformedSpec, "components differ outside the ideal");
  return {ring, d.make(a.value(), b.value())};
}

std::pair<Element, Element> components(const Element& x) {
  const Ring& ring = *x.ring();
  if (ring.kind() == RingKind::Excision) {
    const auto& ex = as_excision(ring);
    return {Element(ex.base(), x.value().parts.at(0)), Element(ex.ideal_ring(), x.value().parts.at(1))};
  }
  const auto& d = as_double(ring);
  return {Element(d.base(), x.value().parts.at(0)), Element(d.base(), x.value().parts.at(1))};
}

Element excision_mul(const Element& x, const Element& y) {
  as_excision(*x.ring());
  require_same_ring(*x.ring(), *y.ring(), "excision product");
  return x * y;
}

Element double_to_excision(const Element& x) {
  const auto& d = as_double(*x.ring());
  RingPtr target = excision_ring(d.base(), d.ideal());
  auto [a, b] = components(x);
  return excision_element(target, b, a - b);
}

Element excision_to_double(const Element& x) {
  const auto& ex = as_excision(*x.ring());
  if (ex.has_ambient()) fail(ErrorCode::RingMismatch, "Z (+) I has no double-ring counterpart");
  RingPtr target = double_ring(ex.base(), ex.ideal());
  auto [r, i] = components(x);
  return double_element(target, r + i, r);
}

Element excision_project(const Element& x, Projection which) {
  const auto& ex = as_excision(*x.ring());
  auto [r, i] = components(x);
  if (which == Projection::FirstSum) return r;
  return Element(ex.ideal_ring(), ex.embed(r.value())) + i;
}

Element excision_section(const RingPtr& excision, const Element& r) {
  const auto& ex = as_excision(*excision);
  return excision_element(excision, r, Element(ex.ideal_ring(), ex.ideal_ring()->zero()));
}

bool rees_contains(const Ideal& ideal, const Element& p, bool extended) {
  RingPtr base = coefficient_ring(*p.ring());
  require_same_ring(*base, *ideal.ring(), "Rees membership");
  const Value& v = p.value();
  for (std::size_t k = 0; k < v.parts.size(); ++k) {
    std::int64_t e = v.low + static_cast<std::int64_t>(k);
    if (base->is_zero(v.parts[k])) continue;
    if (e < 0) {
      if (!extended) return false;
      continue;
    }
    if (e >= 1 && !ideal.power(static_cast<std::size_t>(e)).contains(v.parts[k])) return false;
  }
  return true;
}

std::vector<Element> enumerate_elements(const RingPtr& ring) {
  std::vector<Element> out;
  for (auto& v : ring->elements()) out.emplace_back(ring, std::move(v));
  return out;
}

}  // namespace relwitt
