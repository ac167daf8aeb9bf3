#include "relwitt/row.hpp"

namespace relwitt {

std::vector<std::string> UmRow::to_strings() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(ring->format(e));
  return out;
}

UmRow UmRow::parse(const RingPtr& ring, const std::vector<std::string>& entries) {
  UmRow row{ring, {}};
  for (const auto& s : entries) row.entries.push_back(ring->parse(s));
  return row;
}

UmRow UmRow::unit_vector(const RingPtr& ring, std::size_t n, std::size_t k) {
  if (k >= n) fail(ErrorCode::IndexOutOfRange, "unit vector index out of range");
  UmRow row{ring, std::vector<Value>(n, ring->zero())};
  row.entries[k] = ring->one();
  return row;
}

bool operator==(const UmRow& a, const UmRow& b) {
  return same_ring(*a.ring, *b.ring) && a.entries == b.entries;
}

Element dot(const UmRow& a, const UmRow& b) {
  require_same_ring(*a.ring, *b.ring, "dot product");
  if (a.size() != b.size()) fail(ErrorCode::SizeMismatch, "rows of different length");
  const Ring& R = *a.ring;
  Value s = R.zero();
  for (std::size_t k = 0; k < a.size(); ++k) s = R.add(s, R.mul(a.entries[k], b.entries[k]));
  return {a.ring, s};
}

bool is_relative(const UmRow& v, const Ideal& ideal) {
  require_same_ring(*v.ring, *ideal.ring(), "relative row");
  const Ring& R = *v.ring;
  for (std::size_t k = 0; k < v.size(); ++k) {
    Value target = k == 0 ? R.one() : R.zero();
    if (!ideal.contains(R.sub(v.entries[k], target))) return false;
  }
  return true;
}

}  // namespace relwitt
