#pragma once

// Concrete ring classes. Internal to the library; callers go through
// `make_ring` and the accessors in tower.hpp.

#include <map>
#include <memory>
#include <optional>
#include <set>

#include "relwitt/ideal.hpp"
#include "relwitt/ring.hpp"
#include "relwitt/upoly.hpp"

namespace relwitt::detail {

/// Nilpotency test used by unit checks in polynomial rings.
bool is_nilpotent(const Ring& ring, const Value& a);

class IntegersRing final : public Ring {
 public:
  IntegersRing();
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_integer(const Integer& n) const override;
  std::optional<Value> inverse(const Value& a) const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  bool contains(const Value& a) const override;
  bool is_field() const override { return false; }
};

class RationalsRing final : public Ring {
 public:
  RationalsRing();
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_integer(const Integer& n) const override;
  std::optional<Value> inverse(const Value& a) const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  bool contains(const Value& a) const override;
  bool is_field() const override { return true; }

  static Value make(Integer num, Integer den);
};

class ModularRing final : public Ring {
 public:
  explicit ModularRing(RingSpec spec);
  const Integer& modulus() const noexcept { return n_; }
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_integer(const Integer& n) const override;
  std::optional<Value> inverse(const Value& a) const override;
  bool is_finite() const override { return true; }
  std::size_t cardinality() const override;
  std::vector<Value> elements() const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  bool contains(const Value& a) const override;

 private:
  Integer n_;
};

/// Shared arithmetic for R[t] and R[t, t^-1] style rings.
class PolynomialRing : public Ring {
 public:
  PolynomialRing(RingSpec spec, RingPtr base);
  const RingPtr& base() const noexcept { return base_; }
  const std::string& var() const noexcept { return spec().var; }
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_integer(const Integer& n) const override;
  std::optional<Value> inverse(const Value& a) const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  bool contains(const Value& a) const override;
  bool is_field() const override { return false; }

  Value from_coeffs(upoly::Coeffs c) const;

 private:
  RingPtr base_;
};

class LaurentRing : public Ring {
 public:
  LaurentRing(RingSpec spec, RingPtr base);
  const RingPtr& base() const noexcept { return base_; }
  const std::string& var() const noexcept { return spec().var; }
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_integer(const Integer& n) const override;
  std::optional<Value> inverse(const Value& a) const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  bool contains(const Value& a) const override;
  bool is_field() const override { return false; }

  Value make(upoly::Coeffs c, std::int64_t low) const;

 private:
  RingPtr base_;
};

/// Quotient rings. Three representations:
///   IntegerMod  base Z or Z/n, values are residues mod d
///   Monic       base S[X] and a generator with unit leading coefficient,
///               values are remainders of degree < deg f
///   Coset       finite pre-ring, values are the minimum of their coset in
///               the pre-ring's enumeration order
class QuotientRing final : public Ring {
 public:
  explicit QuotientRing(RingSpec spec);
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_integer(const Integer& n) const override;
  std::optional<Value> inverse(const Value& a) const override;
  bool is_finite() const override;
  std::size_t cardinality() const override;
  std::vector<Value> elements() const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  bool contains(const Value& a) const override;

  /// Image of a base-ring value.
  Value reduce(const Value& base_value) const;
  const RingPtr& base() const noexcept { return base_; }

 private:
  enum class Mode { IntegerMod, Monic, Coset };

  Value monic_reduce(const upoly::Coeffs& c) const;

  Mode mode_ = Mode::IntegerMod;
  RingPtr base_;
  // IntegerMod
  Integer d_{0};
  // Monic
  const PolynomialRing* poly_ = nullptr;
  upoly::Coeffs f_;
  // Coset
  RingPtr pre_;
  std::map<Value, Value, ValueLess> canon_;
  std::vector<Value> reps_;
};

class ProductRing final : public Ring {
 public:
  explicit ProductRing(RingSpec spec);
  const std::vector<RingPtr>& factors() const noexcept { return factors_; }
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_integer(const Integer& n) const override;
  std::optional<Value> inverse(const Value& a) const override;
  bool is_finite() const override;
  std::size_t cardinality() const override;
  std::vector<Value> elements() const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  bool contains(const Value& a) const override;

 private:
  std::vector<RingPtr> factors_;
};

/// R (+) I with (r,i)(s,j) = (rs, rj + si + ij). When an ambient ring A is
/// given, R must be Z and I is an ideal of A; r acts on I through Z -> A.
class ExcisionRing final : public Ring {
 public:
  explicit ExcisionRing(RingSpec spec);
  const RingPtr& base() const noexcept { return base_; }
  /// The ring containing the ideal: the ambient ring, or the base.
  const RingPtr& ideal_ring() const noexcept { return ideal_ring_; }
  const Ideal& ideal() const noexcept { return *ideal_; }
  bool has_ambient() const noexcept { return ideal_ring_ != base_; }
  /// Image of a base value in the ideal's ring.
  Value embed(const Value& r) const;

  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_integer(const Integer& n) const override;
  std::optional<Value> inverse(const Value& a) const override;
  bool is_finite() const override;
  std::size_t cardinality() const override;
  std::vector<Value> elements() const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  bool contains(const Value& a) const override;

  Value make(Value r, Value i) const;

 private:
  RingPtr base_;
  RingPtr ideal_ring_;
  std::optional<Ideal> ideal_;
};

/// {(a,b) in R x R : a - b in I}.
class DoubleRing final : public Ring {
 public:
  explicit DoubleRing(RingSpec spec);
  const RingPtr& base() const noexcept { return base_; }
  const Ideal& ideal() const noexcept { return *ideal_; }

  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_integer(const Integer& n) const override;
  std::optional<Value> inverse(const Value& a) const override;
  bool is_finite() const override;
  std::size_t cardinality() const override;
  std::vector<Value> elements() const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  bool contains(const Value& a) const override;

  Value make(Value a, Value b) const;

 private:
  RingPtr base_;
  std::optional<Ideal> ideal_;
};

/// R[It] inside R[t], or R[It, t^-1] inside R[t, t^-1].
class ReesRing final : public Ring {
 public:
  explicit ReesRing(RingSpec spec);
  const RingPtr& base() const noexcept { return base_; }
  const Ideal& ideal() const noexcept { return *ideal_; }
  bool extended() const noexcept { return kind() == RingKind::ExtendedRees; }

  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_integer(const Integer& n) const override;
  std::optional<Value> inverse(const Value& a) const override;
  std::string format(const Value& a) const override;
  Value parse(std::string_view text) const override;
  bool contains(const Value& a) const override;
  bool is_field() const override { return false; }

  /// Laurent payload in the ambient R[t, t^-1], without the graded check.
  Value make_unchecked(upoly::Coeffs c, std::int64_t low) const;

 private:
  RingPtr base_;
  std::shared_ptr<const LaurentRing> ambient_;
  std::optional<Ideal> ideal_;
};

}  // namespace relwitt::detail
