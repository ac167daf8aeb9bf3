#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "relwitt/ideal.hpp"
#include "relwitt/ring.hpp"

namespace relwitt {

/// Table-driven view of a small finite ring. Elements are addressed by their
/// index in the ring's enumeration order, so index order is canonical order.
class FiniteRing {
 public:
  using Idx = std::uint16_t;
  static constexpr std::size_t kMaxSize = 1024;

  /// Throws InfiniteRing, or TooLarge above kMaxSize elements.
  explicit FiniteRing(RingPtr ring);
  /// Shared, cached view of `ring`.
  static std::shared_ptr<const FiniteRing> of(const RingPtr& ring);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return values_.size(); }

  Idx zero() const noexcept { return zero_; }
  Idx one() const noexcept { return one_; }
  Idx add(Idx a, Idx b) const noexcept { return add_[a * size() + b]; }
  Idx mul(Idx a, Idx b) const noexcept { return mul_[a * size() + b]; }
  Idx neg(Idx a) const noexcept { return neg_[a]; }
  Idx sub(Idx a, Idx b) const noexcept { return add(a, neg(b)); }
  bool is_unit(Idx a) const noexcept { return inv_[a] != kNone; }
  std::optional<Idx> inverse(Idx a) const noexcept;
  Idx from_integer(long long n) const;

  const Value& value(Idx a) const { return values_.at(a); }
  Idx index(const Value& v) const;
  std::vector<Idx> units() const;

 private:
  static constexpr Idx kNone = 0xFFFF;

  RingPtr ring_;
  std::vector<Value> values_;
  std::map<Value, Idx, ValueLess> lookup_;
  std::vector<Idx> add_, mul_, neg_, inv_;
  Idx zero_ = 0, one_ = 0;
};

/// An ideal of a finite ring as an index mask.
class FiniteIdeal {
 public:
  FiniteIdeal(const FiniteRing& ring, const Ideal& ideal);
  bool contains(FiniteRing::Idx a) const noexcept { return mask_[a]; }
  /// Members in index order.
  const std::vector<FiniteRing::Idx>& members() const noexcept { return members_; }
  bool is_unit_ideal() const noexcept { return members_.size() == mask_.size(); }

 private:
  std::vector<bool> mask_;
  std::vector<FiniteRing::Idx> members_;
};

}  // namespace relwitt
