#include "relwitt/ideal.hpp"

#include <algorithm>

#include "relwitt/intmath.hpp"
#include "relwitt/upoly.hpp"
#include "rings_impl.hpp"

namespace relwitt {

std::vector<Value> ideal_closure(const Ring& ring, const std::vector<Value>& generators) {
  auto elems = ring.elements();
  std::set<Value, ValueLess> members{ring.zero()};
  for (const auto& g : generators) {
    std::set<Value, ValueLess> multiples;
    for (const auto& r : elems) multiples.insert(ring.mul(r, g));
    std::set<Value, ValueLess> next;
    for (const auto& s : members) {
      for (const auto& m : multiples) next.insert(ring.add(s, m));
    }
    members = std::move(next);
  }
  std::vector<Value> out;
  out.reserve(members.size());
  for (const auto& e : elems) {
    if (members.count(e) != 0) out.push_back(e);
  }
  return out;
}

Ideal::Ideal(RingPtr ring, std::vector<Value> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!ring_->is_zero(g)) generators_.push_back(std::move(g));
  }
  if (ring_->is_finite()) {
    auto c = std::make_shared<Closure>();
    c->members = ideal_closure(*ring_, generators_);
    c->lookup.insert(c->members.begin(), c->members.end());
    closure_ = std::move(c);
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Value one = ring->one();
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::parse(RingPtr ring, const std::vector<std::string>& generators) {
  if (generators.size() == 1 && generators.front() == "unit") return unit(std::move(ring));
  if (generators.size() == 1 && generators.front() == "zero") return zero(std::move(ring));
  std::vector<Value> gens;
  for (const auto& g : generators) gens.push_back(ring->parse(g));
  return Ideal(std::move(ring), std::move(gens));
}

std::vector<std::string> Ideal::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(ring_->format(g));
  return out;
}

bool Ideal::contains(const Value& x) const {
  if (closure_) return closure_->lookup.count(x) != 0;
  return structural_contains(x);
}

bool Ideal::contains(const Element& x) const {
  require_same_ring(*ring_, *x.ring(), "ideal membership");
  return contains(x.value());
}

bool Ideal::is_unit_ideal() const {
  if (closure_) return closure_->members.size() == ring_->cardinality();
  for (const auto& g : generators_) {
    if (ring_->is_unit(g)) return true;
  }
  try {
    return structural_contains(ring_->one());
  } catch (const AlgebraError& e) {
    if (e.code() == ErrorCode::UndecidableMembership) return false;
    throw;
  }
}

Ideal Ideal::power(std::size_t k) const {
  if (k == 0) return unit(ring_);
  if (k == 1) return *this;
  std::set<Value, ValueLess> products{ring_->one()};
  for (std::size_t step = 0; step < k; ++step) {
    std::set<Value, ValueLess> next;
    for (const auto& p : products) {
      for (const auto& g : generators_) next.insert(ring_->mul(p, g));
    }
    products = std::move(next);
  }
  return Ideal(ring_, std::vector<Value>(products.begin(), products.end()));
}

const std::vector<Value>& Ideal::closure() const {
  if (!closure_) fail(ErrorCode::InfiniteRing, "ideal closure requires a finite ring");
  return closure_->members;
}

bool Ideal::structural_contains(const Value& x) const {
  const Ring& R = *ring_;
  if (R.is_zero(x)) return true;
  if (generators_.empty()) return false;
  for (const auto& g : generators_) {
    if (R.is_unit(g)) return true;
  }
  switch (R.kind()) {
    case RingKind::Integers: {
      Integer g = 0;
      for (const auto& v : generators_) g = gcd(g, v.num);
      return x.num % g == 0;
    }
    case RingKind::Rationals:
      return true;
    case RingKind::Product: {
      const auto& factors = static_cast<const detail::ProductRing&>(R).factors();
      for (std::size_t k = 0; k < factors.size(); ++k) {
        std::vector<Value> gens;
        for (const auto& g : generators_) gens.push_back(g.parts[k]);
        if (!Ideal(factors[k], std::move(gens)).contains(x.parts[k])) return false;
      }
      return true;
    }
    case RingKind::Polynomial: {
      const auto& poly = static_cast<const detail::PolynomialRing&>(R);
      const RingPtr& base = poly.base();
      bool constants = std::all_of(generators_.begin(), generators_.end(),
                                   [](const Value& g) { return g.parts.size() <= 1; });
      if (constants) {
        std::vector<Value> gens;
        for (const auto& g : generators_) gens.push_back(g.parts.front());
        Ideal coefficient_ideal(base, std::move(gens));
        return std::all_of(x.parts.begin(), x.parts.end(),
                           [&](const Value& c) { return coefficient_ideal.contains(c); });
      }
      if (generators_.size() == 1) {
        const auto& g = generators_.front().parts;
        if (base->is_unit(g.back())) return upoly::divmod(*base, x.parts, g).second.empty();
        if (base->kind() == RingKind::Integers) return upoly::exact_divide_integers(x.parts, g).has_value();
      }
      if (base->kind() == RingKind::Rationals || (base->is_finite() && base->is_field())) {
        upoly::Coeffs g;
        for (const auto& v : generators_) g = upoly::gcd_over_field(*base, g, v.parts);
        return upoly::divmod(*base, x.parts, g).second.empty();
      }
      break;
    }
    default:
      break;
  }
  fail(ErrorCode::UndecidableMembership, "no membership rule for this ideal of " + R.key());
}

}  // namespace relwitt
