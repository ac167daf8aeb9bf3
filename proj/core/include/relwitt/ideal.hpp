#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relwitt/ring.hpp"

namespace relwitt {

/// Finitely generated ideal with a decidable membership test where one is
/// available. Over finite rings the full closure of the generators is
/// computed once at construction; membership is a lookup in it.
///
/// Infinite rings support: Z (gcd of the generators), Q, polynomial rings
/// with constant generators (coefficientwise), a single monic generator or a
/// principal ideal over Z or a field. Everything else throws
/// UndecidableMembership.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Value> generators);

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring);
  /// Generators given as strings in the ring's element grammar. The single
  /// word "unit" denotes the unit ideal.
  static Ideal parse(RingPtr ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Value>& generators() const noexcept { return generators_; }
  std::vector<std::string> generator_strings() const;

  bool contains(const Value& x) const;
  bool contains(const Element& x) const;

  /// A generator is a unit, or the finite closure is the whole ring.
  bool is_unit_ideal() const;

  /// The ideal generated by all k-fold products of generators; k = 0 gives
  /// the unit ideal.
  Ideal power(std::size_t k) const;

  bool has_closure() const noexcept { return static_cast<bool>(closure_); }
  /// Members in the ring's enumeration order (finite rings only).
  const std::vector<Value>& closure() const;

 private:
  struct Closure {
    std::vector<Value> members;
    std::set<Value, ValueLess> lookup;
  };

  bool structural_contains(const Value& x) const;

  RingPtr ring_;
  std::vector<Value> generators_;
  std::shared_ptr<const Closure> closure_;
};

/// Smallest subset of a finite ring containing `generators` that is closed
/// under addition and multiplication by ring elements. Computed by a plain
/// fixpoint over sets; used both for ideal membership and by tests.
std::vector<Value> ideal_closure(const Ring& ring, const std::vector<Value>& generators);

}  // namespace relwitt
