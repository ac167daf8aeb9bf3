#include "relwitt/finite_ring.hpp"

#include <mutex>

namespace relwitt {

FiniteRing::FiniteRing(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_->is_finite()) fail(ErrorCode::InfiniteRing, "table view needs a finite ring: " + ring_->key());
  if (ring_->cardinality() > kMaxSize) {
    fail(ErrorCode::TooLarge, "ring has more than " + std::to_string(kMaxSize) + " elements");
  }
  values_ = ring_->elements();
  const std::size_t n = values_.size();
  for (std::size_t k = 0; k < n; ++k) lookup_.emplace(values_[k], static_cast<Idx>(k));
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    neg_[a] = index(ring_->neg(values_[a]));
    for (std::size_t b = a; b < n; ++b) {
      Idx s = index(ring_->add(values_[a], values_[b]));
      Idx p = index(ring_->mul(values_[a], values_[b]));
      add_[a * n + b] = add_[b * n + a] = s;
      mul_[a * n + b] = mul_[b * n + a] = p;
    }
  }
  zero_ = index(ring_->zero());
  one_ = index(ring_->one());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul_[a * n + b] == one_) {
        inv_[a] = static_cast<Idx>(b);
        break;
      }
    }
  }
}

std::shared_ptr<const FiniteRing> FiniteRing::of(const RingPtr& ring) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const FiniteRing>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(ring->key());
    if (it != cache.end()) return it->second;
  }
  auto view = std::make_shared<const FiniteRing>(ring);
  std::lock_guard lock(mutex);
  return cache.emplace(ring->key(), view).first->second;
}

std::optional<FiniteRing::Idx> FiniteRing::inverse(Idx a) const noexcept {
  if (inv_[a] == kNone) return std::nullopt;
  return inv_[a];
}

FiniteRing::Idx FiniteRing::from_integer(long long n) const { return index(ring_->from_integer(Integer(n))); }

FiniteRing::Idx FiniteRing::index(const Value& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) fail(ErrorCode::RingMismatch, "value does not belong to " + ring_->key());
  return it->second;
}

std::vector<FiniteRing::Idx> FiniteRing::units() const {
  std::vector<Idx> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (inv_[a] != kNone) out.push_back(static_cast<Idx>(a));
  }
  return out;
}

FiniteIdeal::FiniteIdeal(const FiniteRing& ring, const Ideal& ideal) : mask_(ring.size(), false) {
  require_same_ring(*ring.ring(), *ideal.ring(), "finite ideal view");
  for (const auto& v : ideal.closure()) mask_[ring.index(v)] = true;
  for (std::size_t a = 0; a < mask_.size(); ++a) {
    if (mask_[a]) members_.push_back(static_cast<FiniteRing::Idx>(a));
  }
}

}  // namespace relwitt
