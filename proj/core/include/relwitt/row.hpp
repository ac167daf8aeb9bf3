#pragma once

#include <string>
#include <vector>

#include "relwitt/ideal.hpp"
#include "relwitt/ring.hpp"

namespace relwitt {

/// A row of ring elements. Unimodularity is a property checked by the
/// operations that need it, not an invariant of the type.
struct UmRow {
  RingPtr ring;
  std::vector<Value> entries;

  std::size_t size() const noexcept { return entries.size(); }
  Element at(std::size_t k) const { return {ring, entries.at(k)}; }
  std::vector<std::string> to_strings() const;

  static UmRow parse(const RingPtr& ring, const std::vector<std::string>& entries);
  /// e_k, 0-based.
  static UmRow unit_vector(const RingPtr& ring, std::size_t n, std::size_t k = 0);

  friend bool operator==(const UmRow& a, const UmRow& b);
};

/// sum a_k b_k. Throws SizeMismatch or RingMismatch.
Element dot(const UmRow& a, const UmRow& b);

/// Entries congruent to (1, 0, ..., 0) modulo I.
bool is_relative(const UmRow& v, const Ideal& ideal);

}  // namespace relwitt
