#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "relwitt/error.hpp"

namespace relwitt {

using Integer = boost::multiprecision::cpp_int;

/// Payload of a ring element. How the fields are read depends on the ring
/// that owns the value:
///   integers, residues            num
///   rationals                     num / den, reduced, den > 0
///   polynomials                   parts = c_0 .. c_d, no trailing zeros
///   Laurent and Rees polynomials  parts[k] is the coefficient of t^(low + k)
///   products, excision, double    parts = components
/// Every ring keeps its values canonical, so `==` is ring equality.
struct Value {
  Integer num{0};
  Integer den{1};
  std::int64_t low{0};
  std::vector<Value> parts;

  friend bool operator==(const Value&, const Value&) = default;
};

/// Total order on payloads, used for sets and maps of values.
struct ValueLess {
  bool operator()(const Value& a, const Value& b) const;
};

enum class RingKind {
  Integers,
  Rationals,
  Modular,
  Polynomial,
  Laurent,
  Quotient,
  Product,
  Excision,
  Double,
  Rees,
  ExtendedRees,
};

std::string_view kind_name(RingKind kind) noexcept;

/// Declarative description of a ring in the tower. Ideal generators and
/// quotient moduli are stored as strings in the element grammar of the base.
struct RingSpec {
  RingKind kind = RingKind::Integers;
  Integer modulus{0};
  std::string var;
  std::vector<RingSpec> children;
  std::vector<std::string> generators;
  // Excision ring Z (+) I where I is an ideal of this ambient ring.
  std::vector<RingSpec> ambient;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

  static RingSpec integers();
  static RingSpec rationals();
  static RingSpec modular(Integer n);
  static RingSpec polynomial(RingSpec base, std::string var);
  static RingSpec laurent(RingSpec base, std::string var);
  static RingSpec quotient(RingSpec base, std::vector<std::string> modulus);
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec excision(RingSpec base, std::vector<std::string> ideal);
  static RingSpec integer_excision(RingSpec ambient, std::vector<std::string> ideal);
  static RingSpec double_ring(RingSpec base, std::vector<std::string> ideal);
  static RingSpec rees(RingSpec base, std::vector<std::string> ideal, std::string var = "t");
  static RingSpec extended_rees(RingSpec base, std::vector<std::string> ideal,
                                std::string var = "t");
  /// The field with q elements for q prime, 4, 8 or 9.
  static RingSpec galois(unsigned q);
};

nlohmann::json spec_to_json(const RingSpec& spec);
RingSpec spec_from_json(const nlohmann::json& j);

/// Accepts a JSON object or the shorthand used on the command line:
/// `int`, `rat`, `zmod:N`, `gf:Q`, and comma separated factors for products.
RingSpec parse_ring_spec(std::string_view text);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A node of the ring tower. Rings are immutable after construction and are
/// always handled through `RingPtr`.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  explicit Ring(RingSpec spec);
  virtual ~Ring() = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  const RingSpec& spec() const noexcept { return spec_; }
  /// Canonical serialization of the spec; two rings with the same key are the
  /// same ring.
  const std::string& key() const noexcept { return key_; }
  RingKind kind() const noexcept { return spec_.kind; }

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  virtual Value from_integer(const Integer& n) const;

  Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
  Value pow(const Value& a, std::uint64_t k) const;
  bool is_zero(const Value& a) const { return a == zero(); }

  virtual bool is_unit(const Value& a) const;
  virtual std::optional<Value> inverse(const Value& a) const;

  virtual bool is_finite() const { return false; }
  /// Throws InfiniteRing for infinite rings.
  virtual std::size_t cardinality() const;
  /// Elements in the ring's fixed enumeration order. Throws InfiniteRing.
  virtual std::vector<Value> elements() const;

  virtual std::string format(const Value& a) const = 0;
  virtual Value parse(std::string_view text) const = 0;
  /// Whether a payload satisfies the ring's structural constraints.
  virtual bool contains(const Value& a) const;

  /// True when every nonzero element is a unit. Only decided for rings where
  /// this is cheap (finite rings, Z, Q); otherwise false.
  virtual bool is_field() const;

  RingPtr self() const { return shared_from_this(); }

 private:
  RingSpec spec_;
  std::string key_;
};

RingPtr make_ring(const RingSpec& spec);

/// A value tied to the ring it lives in.
class Element {
 public:
  Element(RingPtr ring, Value value);

  const RingPtr& ring() const noexcept { return ring_; }
  const Value& value() const noexcept { return value_; }

  bool is_zero() const { return ring_->is_zero(value_); }
  bool is_unit() const { return ring_->is_unit(value_); }
  std::optional<Element> inverse() const;
  Element pow(std::uint64_t k) const { return {ring_, ring_->pow(value_, k)}; }
  std::string str() const { return ring_->format(value_); }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend bool operator==(const Element& a, const Element& b);

 private:
  RingPtr ring_;
  Value value_;
};

bool same_ring(const Ring& a, const Ring& b) noexcept;
void require_same_ring(const Ring& a, const Ring& b, std::string_view what);

Element parse_element(const RingPtr& ring, std::string_view text);
Element integer_element(const RingPtr& ring, const Integer& n);

}  // namespace relwitt
