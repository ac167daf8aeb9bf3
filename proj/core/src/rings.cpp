#include <algorithm>
#include <limits>
#include <map>
#include <mutex>

#include "relwitt/intmath.hpp"
#include "rings_impl.hpp"
#include "text_util.hpp"

namespace relwitt {

bool ValueLess::operator()(const Value& a, const Value& b) const {
  if (a.num != b.num) return a.num < b.num;
  if (a.den != b.den) return a.den < b.den;
  if (a.low != b.low) return a.low < b.low;
  return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(),
                                      *this);
}

// ---- Ring defaults ----------------------------------------------------------

Ring::Ring(RingSpec spec) : spec_(std::move(spec)), key_(spec_to_json(spec_).dump()) {}

Value Ring::from_integer(const Integer& n) const {
  Integer k = n < 0 ? Integer(-n) : n;
  Value acc = zero();
  Value step = one();
  while (k > 0) {
    if ((k & 1) != 0) acc = add(acc, step);
    k >>= 1;
    if (k > 0) step = add(step, step);
  }
  return n < 0 ? neg(acc) : acc;
}

Value Ring::pow(const Value& a, std::uint64_t k) const {
  Value result = one();
  Value sq = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, sq);
    k >>= 1U;
    if (k > 0) sq = mul(sq, sq);
  }
  return result;
}

bool Ring::is_unit(const Value& a) const { return inverse(a).has_value(); }

std::optional<Value> Ring::inverse(const Value& a) const {
  Value u = one();
  if (is_finite()) {
    for (const auto& b : elements()) {
      if (mul(a, b) == u) return b;
    }
    return std::nullopt;
  }
  if (a == u) return u;
  if (a == neg(u)) return a;
  return std::nullopt;
}

std::size_t Ring::cardinality() const {
  if (!is_finite()) fail(ErrorCode::InfiniteRing, "ring is infinite: " + key());
  return elements().size();
}

std::vector<Value> Ring::elements() const { fail(ErrorCode::InfiniteRing, "ring is infinite: " + key()); }

bool Ring::contains(const Value&) const { return true; }

bool Ring::is_field() const {
  if (!is_finite()) return false;
  auto elems = elements();
  if (elems.size() < 2) return false;
  for (const auto& x : elems) {
    if (!is_zero(x) && !is_unit(x)) return false;
  }
  return true;
}

namespace detail {

namespace {

Value int_value(Integer n) {
  Value v;
  v.num = std::move(n);
  return v;
}

Value parts_value(std::vector<Value> parts) {
  Value v;
  v.parts = std::move(parts);
  return v;
}

bool clean_scalar(const Value& a) { return a.den == 1 && a.low == 0 && a.parts.empty(); }

bool clean_parts(const Value& a) { return a.num == 0 && a.den == 1 && a.low == 0; }

std::string format_tuple(const std::vector<RingPtr>& rings, const Value& a) {
  std::string out = "(";
  for (std::size_t k = 0; k < rings.size(); ++k) {
    if (k > 0) out += "|";
    out += rings[k]->format(a.parts.at(k));
  }
  return out + ")";
}

std::vector<Value> parse_tuple(const std::vector<RingPtr>& rings, std::string_view text) {
  auto fields = text::split_tuple(text);
  if (fields.size() != rings.size()) {
    fail(ErrorCode::ParseError, "expected " + std::to_string(rings.size()) + " components in '" +
                                    std::string(text) + "'");
  }
  std::vector<Value> out;
  for (std::size_t k = 0; k < rings.size(); ++k) out.push_back(rings[k]->parse(fields[k]));
  return out;
}

// Laurent arithmetic on (coefficients, low exponent) pairs.
Value laurent_add(const Ring& base, const Value& a, const Value& b) {
  if (a.parts.empty()) return b;
  if (b.parts.empty()) return a;
  std::int64_t low = std::min(a.low, b.low);
  std::int64_t high = std::max(a.low + static_cast<std::int64_t>(a.parts.size()),
                               b.low + static_cast<std::int64_t>(b.parts.size()));
  upoly::Coeffs c(static_cast<std::size_t>(high - low), base.zero());
  for (std::size_t k = 0; k < a.parts.size(); ++k) c[static_cast<std::size_t>(a.low - low) + k] = a.parts[k];
  for (std::size_t k = 0; k < b.parts.size(); ++k) {
    auto& slot = c[static_cast<std::size_t>(b.low - low) + k];
    slot = base.add(slot, b.parts[k]);
  }
  upoly::normalize_laurent(base, c, low);
  Value v;
  v.low = low;
  v.parts = std::move(c);
  return v;
}

Value laurent_mul(const Ring& base, const Value& a, const Value& b) {
  upoly::Coeffs c = upoly::mul(base, a.parts, b.parts);
  std::int64_t low = a.low + b.low;
  upoly::normalize_laurent(base, c, low);
  Value v;
  v.low = low;
  v.parts = std::move(c);
  return v;
}

Value laurent_neg(const Ring& base, const Value& a) {
  Value v = a;
  v.parts = upoly::neg(base, a.parts);
  return v;
}

Value laurent_constant(const Ring& base, const Value& c) {
  upoly::Coeffs coeffs{c};
  std::int64_t low = 0;
  upoly::normalize_laurent(base, coeffs, low);
  Value v;
  v.low = low;
  v.parts = std::move(coeffs);
  return v;
}

std::optional<Value> laurent_inverse(const Ring& base, const Value& a) {
  if (a.parts.size() != 1) return std::nullopt;
  auto inv = base.inverse(a.parts.front());
  if (!inv) return std::nullopt;
  Value v;
  v.low = -a.low;
  v.parts = {*inv};
  return v;
}

bool laurent_contains(const Ring& base, const Value& a) {
  if (a.num != 0 || a.den != 1) return false;
  if (!a.parts.empty() && (base.is_zero(a.parts.front()) || base.is_zero(a.parts.back()))) return false;
  if (a.parts.empty() && a.low != 0) return false;
  return std::all_of(a.parts.begin(), a.parts.end(), [&](const Value& c) { return base.contains(c); });
}

}  // namespace

bool is_nilpotent(const Ring& ring, const Value& a) {
  if (ring.is_zero(a)) return true;
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return false;
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      const auto& base = ring.kind() == RingKind::Polynomial
                             ? static_cast<const PolynomialRing&>(ring).base()
                             : static_cast<const LaurentRing&>(ring).base();
      return std::all_of(a.parts.begin(), a.parts.end(),
                         [&](const Value& c) { return is_nilpotent(*base, c); });
    }
    case RingKind::Product: {
      const auto& factors = static_cast<const ProductRing&>(ring).factors();
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (!is_nilpotent(*factors[k], a.parts[k])) return false;
      }
      return true;
    }
    default:
      break;
  }
  Value x = a;
  for (int k = 0; k < 64; ++k) {
    x = ring.mul(x, x);
    if (ring.is_zero(x)) return true;
  }
  return false;
}

// ---- Z ----------------------------------------------------------------------

IntegersRing::IntegersRing() : Ring(RingSpec::integers()) {}
Value IntegersRing::zero() const { return int_value(0); }
Value IntegersRing::one() const { return int_value(1); }
Value IntegersRing::add(const Value& a, const Value& b) const { return int_value(a.num + b.num); }
Value IntegersRing::neg(const Value& a) const { return int_value(-a.num); }
Value IntegersRing::mul(const Value& a, const Value& b) const { return int_value(a.num * b.num); }
Value IntegersRing::from_integer(const Integer& n) const { return int_value(n); }

std::optional<Value> IntegersRing::inverse(const Value& a) const {
  if (a.num == 1 || a.num == -1) return a;
  return std::nullopt;
}

std::string IntegersRing::format(const Value& a) const { return a.num.str(); }

Value IntegersRing::parse(std::string_view text) const {
  return int_value(text::parse_integer(text::strip_spaces(text)));
}

bool IntegersRing::contains(const Value& a) const { return clean_scalar(a); }

// ---- Q ----------------------------------------------------------------------

RationalsRing::RationalsRing() : Ring(RingSpec::rationals()) {}

Value RationalsRing::make(Integer num, Integer den) {
  if (den == 0) fail(ErrorCode::NotAUnit, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Integer g = relwitt::gcd(num, den);
  Value v;
  v.num = num / g;
  v.den = den / g;
  return v;
}

Value RationalsRing::zero() const { return make(0, 1); }
Value RationalsRing::one() const { return make(1, 1); }
Value RationalsRing::add(const Value& a, const Value& b) const {
  return make(a.num * b.den + b.num * a.den, a.den * b.den);
}
Value RationalsRing::neg(const Value& a) const { return make(-a.num, a.den); }
Value RationalsRing::mul(const Value& a, const Value& b) const { return make(a.num * b.num, a.den * b.den); }
Value RationalsRing::from_integer(const Integer& n) const { return make(n, 1); }

std::optional<Value> RationalsRing::inverse(const Value& a) const {
  if (a.num == 0) return std::nullopt;
  return make(a.den, a.num);
}

std::string RationalsRing::format(const Value& a) const {
  if (a.den == 1) return a.num.str();
  return a.num.str() + "/" + a.den.str();
}

Value RationalsRing::parse(std::string_view text_in) const {
  std::string s = text::strip_spaces(text_in);
  auto slash = s.find('/');
  if (slash == std::string::npos) return make(text::parse_integer(s), 1);
  Integer den = text::parse_integer(s.substr(slash + 1));
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  return make(text::parse_integer(s.substr(0, slash)), den);
}

bool RationalsRing::contains(const Value& a) const {
  return a.den > 0 && a.low == 0 && a.parts.empty() && relwitt::gcd(a.num, a.den) == 1;
}

// ---- Z/n --------------------------------------------------------------------

ModularRing::ModularRing(RingSpec spec) : Ring(std::move(spec)), n_(this->spec().modulus) {
  if (n_ < 2) fail(ErrorCode::MalformedSpec, "modulus must be at least 2, got " + n_.str());
}

Value ModularRing::zero() const { return int_value(0); }
Value ModularRing::one() const { return int_value(1); }
Value ModularRing::add(const Value& a, const Value& b) const {
  Integer s = a.num + b.num;
  if (s >= n_) s -= n_;
  return int_value(std::move(s));
}
Value ModularRing::neg(const Value& a) const { return int_value(a.num == 0 ? Integer(0) : Integer(n_ - a.num)); }
Value ModularRing::mul(const Value& a, const Value& b) const { return int_value((a.num * b.num) % n_); }
Value ModularRing::from_integer(const Integer& n) const { return int_value(floor_mod(n, n_)); }

std::optional<Value> ModularRing::inverse(const Value& a) const {
  auto e = ext_gcd(a.num, n_);
  if (e.g != 1) return std::nullopt;
  return int_value(floor_mod(e.x, n_));
}

std::size_t ModularRing::cardinality() const {
  if (n_ > Integer(std::numeric_limits<std::uint32_t>::max())) fail(ErrorCode::TooLarge, "ring too large to enumerate");
  return static_cast<std::size_t>(n_);
}

std::vector<Value> ModularRing::elements() const {
  std::size_t n = cardinality();
  std::vector<Value> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(int_value(k));
  return out;
}

std::string ModularRing::format(const Value& a) const { return a.num.str(); }

Value ModularRing::parse(std::string_view text) const {
  return from_integer(text::parse_integer(text::strip_spaces(text)));
}

bool ModularRing::contains(const Value& a) const { return clean_scalar(a) && a.num >= 0 && a.num < n_; }

// ---- S[X] -------------------------------------------------------------------

PolynomialRing::PolynomialRing(RingSpec spec, RingPtr base) : Ring(std::move(spec)), base_(std::move(base)) {
  if (var().empty()) fail(ErrorCode::MalformedSpec, "polynomial variable name is empty");
}

Value PolynomialRing::from_coeffs(upoly::Coeffs c) const {
  upoly::trim(*base_, c);
  return parts_value(std::move(c));
}

Value PolynomialRing::zero() const { return parts_value({}); }
Value PolynomialRing::one() const { return from_coeffs({base_->one()}); }
Value PolynomialRing::add(const Value& a, const Value& b) const {
  return parts_value(upoly::add(*base_, a.parts, b.parts));
}
Value PolynomialRing::neg(const Value& a) const { return parts_value(upoly::neg(*base_, a.parts)); }
Value PolynomialRing::mul(const Value& a, const Value& b) const {
  return parts_value(upoly::mul(*base_, a.parts, b.parts));
}
Value PolynomialRing::from_integer(const Integer& n) const { return from_coeffs({base_->from_integer(n)}); }

std::optional<Value> PolynomialRing::inverse(const Value& a) const {
  if (a.parts.empty()) return std::nullopt;
  auto c0_inv = base_->inverse(a.parts.front());
  if (!c0_inv) return std::nullopt;
  upoly::Coeffs e = upoly::scale(*base_, a.parts, *c0_inv);
  e.front() = base_->zero();
  upoly::trim(*base_, e);
  for (const auto& c : e) {
    if (!is_nilpotent(*base_, c)) return std::nullopt;
  }
  // (1 + e)^-1 = 1 - e + e^2 - ...; e is nilpotent.
  upoly::Coeffs sum{base_->one()};
  upoly::Coeffs term{base_->one()};
  upoly::Coeffs minus_e = upoly::neg(*base_, e);
  for (int k = 0; k < 256 && !term.empty(); ++k) {
    term = upoly::mul(*base_, term, minus_e);
    sum = upoly::add(*base_, sum, term);
  }
  if (!term.empty()) return std::nullopt;
  Value inv = from_coeffs(upoly::scale(*base_, sum, *c0_inv));
  if (mul(a, inv) != one()) return std::nullopt;
  return inv;
}

std::string PolynomialRing::format(const Value& a) const { return upoly::format(*base_, a.parts, 0, var()); }

Value PolynomialRing::parse(std::string_view text) const {
  return from_coeffs(upoly::parse(*base_, text, var(), false).coeffs);
}

bool PolynomialRing::contains(const Value& a) const {
  if (!clean_parts(a)) return false;
  if (!a.parts.empty() && base_->is_zero(a.parts.back())) return false;
  return std::all_of(a.parts.begin(), a.parts.end(), [&](const Value& c) { return base_->contains(c); });
}

// ---- S[t, t^-1] -------------------------------------------------------------

LaurentRing::LaurentRing(RingSpec spec, RingPtr base) : Ring(std::move(spec)), base_(std::move(base)) {
  if (var().empty()) fail(ErrorCode::MalformedSpec, "Laurent variable name is empty");
}

Value LaurentRing::make(upoly::Coeffs c, std::int64_t low) const {
  upoly::normalize_laurent(*base_, c, low);
  Value v;
  v.low = low;
  v.parts = std::move(c);
  return v;
}

Value LaurentRing::zero() const { return Value{}; }
Value LaurentRing::one() const { return laurent_constant(*base_, base_->one()); }
Value LaurentRing::add(const Value& a, const Value& b) const { return laurent_add(*base_, a, b); }
Value LaurentRing::neg(const Value& a) const { return laurent_neg(*base_, a); }
Value LaurentRing::mul(const Value& a, const Value& b) const { return laurent_mul(*base_, a, b); }
Value LaurentRing::from_integer(const Integer& n) const { return laurent_constant(*base_, base_->from_integer(n)); }
std::optional<Value> LaurentRing::inverse(const Value& a) const { return laurent_inverse(*base_, a); }

std::string LaurentRing::format(const Value& a) const { return upoly::format(*base_, a.parts, a.low, var()); }

Value LaurentRing::parse(std::string_view text) const {
  auto p = upoly::parse(*base_, text, var(), true);
  return make(std::move(p.coeffs), p.low);
}

bool LaurentRing::contains(const Value& a) const { return laurent_contains(*base_, a); }

// ---- quotients --------------------------------------------------------------

QuotientRing::QuotientRing(RingSpec spec) : Ring(std::move(spec)) {
  const RingSpec& s = this->spec();
  if (s.children.size() != 1) fail(ErrorCode::MalformedSpec, "quotient needs exactly one base ring");
  if (s.generators.empty()) fail(ErrorCode::MalformedSpec, "quotient needs at least one modulus generator");
  base_ = make_ring(s.children.front());
  std::vector<Value> gens;
  for (const auto& g : s.generators) {
    Value v = base_->parse(g);
    if (base_->is_zero(v)) fail(ErrorCode::MalformedSpec, "quotient modulus generator is zero: '" + g + "'");
    gens.push_back(std::move(v));
  }

  if (base_->kind() == RingKind::Integers || base_->kind() == RingKind::Modular) {
    mode_ = Mode::IntegerMod;
    d_ = base_->kind() == RingKind::Modular ? static_cast<const ModularRing&>(*base_).modulus() : Integer(0);
    for (const auto& g : gens) d_ = relwitt::gcd(d_, g.num);
    if (d_ == 1) fail(ErrorCode::MalformedSpec, "quotient is the zero ring");
    return;
  }

  if (base_->kind() == RingKind::Polynomial) {
    const auto& poly = static_cast<const PolynomialRing&>(*base_);
    const Ring& coeff = *poly.base();
    std::optional<std::size_t> pick;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto& c = gens[k].parts;
      if (c.size() < 2 || !coeff.is_unit(c.back())) continue;
      if (!pick || c.size() < gens[*pick].parts.size()) pick = k;
    }
    if (!pick) fail(ErrorCode::MalformedSpec, "quotient of a polynomial ring needs a generator with unit leading coefficient");
    poly_ = &poly;
    f_ = upoly::scale(coeff, gens[*pick].parts, *coeff.inverse(gens[*pick].parts.back()));
    std::vector<std::string> rest;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k == *pick) continue;
      Value r = monic_reduce(gens[k].parts);
      if (!base_->is_zero(r)) rest.push_back(base_->format(r));
    }
    mode_ = Mode::Monic;
    if (rest.empty()) return;
    if (!coeff.is_finite()) fail(ErrorCode::MalformedSpec, "unsupported quotient of an infinite polynomial ring");
    pre_ = make_ring(RingSpec::quotient(s.children.front(), {base_->format(poly.from_coeffs(f_))}));
    gens.clear();
    for (const auto& g : rest) gens.push_back(pre_->parse(g));
  } else {
    if (!base_->is_finite()) fail(ErrorCode::MalformedSpec, "unsupported quotient of an infinite ring");
    pre_ = base_;
  }

  mode_ = Mode::Coset;
  auto closure = ideal_closure(*pre_, gens);
  auto elems = pre_->elements();
  if (closure.size() == elems.size()) fail(ErrorCode::MalformedSpec, "quotient is the zero ring");
  for (const auto& x : elems) {
    if (canon_.count(x) != 0) continue;
    for (const auto& i : closure) canon_.emplace(pre_->add(x, i), x);
    reps_.push_back(x);
  }
}

Value QuotientRing::monic_reduce(const upoly::Coeffs& c) const {
  return poly_->from_coeffs(upoly::divmod(*poly_->base(), c, f_).second);
}

Value QuotientRing::reduce(const Value& v) const {
  switch (mode_) {
    case Mode::IntegerMod:
      return int_value(floor_mod(v.num, d_));
    case Mode::Monic:
      return monic_reduce(v.parts);
    case Mode::Coset: {
      if (pre_ == base_) return canon_.at(v);
      return canon_.at(static_cast<const QuotientRing&>(*pre_).reduce(v));
    }
  }
  return v;
}

Value QuotientRing::zero() const { return reduce(base_->zero()); }
Value QuotientRing::one() const { return reduce(base_->one()); }
Value QuotientRing::add(const Value& a, const Value& b) const { return reduce(base_->add(a, b)); }
Value QuotientRing::neg(const Value& a) const { return reduce(base_->neg(a)); }
Value QuotientRing::mul(const Value& a, const Value& b) const { return reduce(base_->mul(a, b)); }
Value QuotientRing::from_integer(const Integer& n) const { return reduce(base_->from_integer(n)); }

std::optional<Value> QuotientRing::inverse(const Value& a) const {
  if (mode_ == Mode::IntegerMod) {
    auto e = ext_gcd(a.num, d_);
    if (e.g != 1) return std::nullopt;
    return int_value(floor_mod(e.x, d_));
  }
  if (is_finite()) return Ring::inverse(a);
  auto inv = base_->inverse(a);
  if (inv) return reduce(*inv);
  return std::nullopt;
}

bool QuotientRing::is_finite() const {
  if (mode_ == Mode::Monic) return poly_->base()->is_finite();
  return mode_ != Mode::IntegerMod || d_ != 0;
}

std::size_t QuotientRing::cardinality() const {
  switch (mode_) {
    case Mode::IntegerMod:
      if (d_ == 0) fail(ErrorCode::InfiniteRing, "ring is infinite: " + key());
      if (d_ > Integer(std::numeric_limits<std::uint32_t>::max())) fail(ErrorCode::TooLarge, "ring too large");
      return static_cast<std::size_t>(d_);
    case Mode::Monic: {
      std::size_t q = poly_->base()->cardinality();
      std::size_t n = 1;
      for (std::size_t k = 0; k + 1 < f_.size(); ++k) {
        if (n > (std::size_t{1} << 32) / q) fail(ErrorCode::TooLarge, "ring too large to enumerate");
        n *= q;
      }
      return n;
    }
    case Mode::Coset:
      return reps_.size();
  }
  return 0;
}

std::vector<Value> QuotientRing::elements() const {
  switch (mode_) {
    case Mode::IntegerMod: {
      std::size_t n = cardinality();
      std::vector<Value> out;
      for (std::size_t k = 0; k < n; ++k) out.push_back(int_value(k));
      return out;
    }
    case Mode::Monic: {
      std::size_t n = cardinality();
      auto digits = poly_->base()->elements();
      std::size_t width = f_.size() - 1;
      std::vector<std::size_t> counter(width, 0);
      std::vector<Value> out;
      out.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        upoly::Coeffs c;
        for (std::size_t w = 0; w < width; ++w) c.push_back(digits[counter[w]]);
        out.push_back(poly_->from_coeffs(std::move(c)));
        for (std::size_t w = 0; w < width; ++w) {
          if (++counter[w] < digits.size()) break;
          counter[w] = 0;
        }
      }
      return out;
    }
    case Mode::Coset:
      return reps_;
  }
  return {};
}

std::string QuotientRing::format(const Value& a) const { return base_->format(a); }
Value QuotientRing::parse(std::string_view text) const { return reduce(base_->parse(text)); }

bool QuotientRing::contains(const Value& a) const {
  if (!base_->contains(a)) return false;
  if (mode_ == Mode::Coset) {
    auto it = std::find(reps_.begin(), reps_.end(), a);
    return it != reps_.end();
  }
  return reduce(a) == a;
}

// ---- products ---------------------------------------------------------------

ProductRing::ProductRing(RingSpec spec) : Ring(std::move(spec)) {
  if (this->spec().children.empty()) fail(ErrorCode::MalformedSpec, "product needs at least one factor");
  for (const auto& c : this->spec().children) factors_.push_back(make_ring(c));
}

Value ProductRing::zero() const {
  std::vector<Value> p;
  for (const auto& f : factors_) p.push_back(f->zero());
  return parts_value(std::move(p));
}

Value ProductRing::one() const {
  std::vector<Value> p;
  for (const auto& f : factors_) p.push_back(f->one());
  return parts_value(std::move(p));
}

Value ProductRing::add(const Value& a, const Value& b) const {
  std::vector<Value> p;
  for (std::size_t k = 0; k < factors_.size(); ++k) p.push_back(factors_[k]->add(a.parts[k], b.parts[k]));
  return parts_value(std::move(p));
}

Value ProductRing::neg(const Value& a) const {
  std::vector<Value> p;
  for (std::size_t k = 0; k < factors_.size(); ++k) p.push_back(factors_[k]->neg(a.parts[k]));
  return parts_value(std::move(p));
}

Value ProductRing::mul(const Value& a, const Value& b) const {
  std::vector<Value> p;
  for (std::size_t k = 0; k < factors_.size(); ++k) p.push_back(factors_[k]->mul(a.parts[k], b.parts[k]));
  return parts_value(std::move(p));
}

Value ProductRing::from_integer(const Integer& n) const {
  std::vector<Value> p;
  for (const auto& f : factors_) p.push_back(f->from_integer(n));
  return parts_value(std::move(p));
}

std::optional<Value> ProductRing::inverse(const Value& a) const {
  std::vector<Value> p;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    auto inv = factors_[k]->inverse(a.parts[k]);
    if (!inv) return std::nullopt;
    p.push_back(std::move(*inv));
  }
  return parts_value(std::move(p));
}

bool ProductRing::is_finite() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const RingPtr& f) { return f->is_finite(); });
}

std::size_t ProductRing::cardinality() const {
  if (!is_finite()) fail(ErrorCode::InfiniteRing, "ring is infinite: " + key());
  std::size_t n = 1;
  for (const auto& f : factors_) {
    std::size_t q = f->cardinality();
    if (n > (std::size_t{1} << 32) / q) fail(ErrorCode::TooLarge, "ring too large to enumerate");
    n *= q;
  }
  return n;
}

std::vector<Value> ProductRing::elements() const {
  cardinality();
  std::vector<std::vector<Value>> parts{{}};
  for (const auto& f : factors_) {
    std::vector<std::vector<Value>> next;
    auto elems = f->elements();
    for (const auto& prefix : parts) {
      for (const auto& e : elems) {
        auto p = prefix;
        p.push_back(e);
        next.push_back(std::move(p));
      }
    }
    parts = std::move(next);
  }
  std::vector<Value> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(parts_value(std::move(p)));
  return out;
}

std::string ProductRing::format(const Value& a) const { return format_tuple(factors_, a); }

Value ProductRing::parse(std::string_view text_in) const {
  std::string s = text::strip_spaces(text_in);
  if (text::is_integer_literal(s)) return from_integer(text::parse_integer(s));
  return parts_value(parse_tuple(factors_, s));
}

bool ProductRing::contains(const Value& a) const {
  if (!clean_parts(a) || a.parts.size() != factors_.size()) return false;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (!factors_[k]->contains(a.parts[k])) return false;
  }
  return true;
}

// ---- R (+) I ----------------------------------------------------------------

ExcisionRing::ExcisionRing(RingSpec spec) : Ring(std::move(spec)) {
  const RingSpec& s = this->spec();
  if (s.children.size() != 1) fail(ErrorCode::MalformedSpec, "excision needs exactly one base ring");
  base_ = make_ring(s.children.front());
  ideal_ring_ = base_;
  if (!s.ambient.empty()) {
    if (base_->kind() != RingKind::Integers) {
      fail(ErrorCode::MalformedSpec, "an excision ring with an ambient ring must have base Z");
    }
    ideal_ring_ = make_ring(s.ambient.front());
  }
  ideal_.emplace(Ideal::parse(ideal_ring_, s.generators));
}

Value ExcisionRing::embed(const Value& r) const {
  if (!has_ambient()) return r;
  return ideal_ring_->from_integer(r.num);
}

Value ExcisionRing::make(Value r, Value i) const { return parts_value({std::move(r), std::move(i)}); }

Value ExcisionRing::zero() const { return make(base_->zero(), ideal_ring_->zero()); }
Value ExcisionRing::one() const { return make(base_->one(), ideal_ring_->zero()); }

Value ExcisionRing::add(const Value& a, const Value& b) const {
  return make(base_->add(a.parts[0], b.parts[0]), ideal_ring_->add(a.parts[1], b.parts[1]));
}

Value ExcisionRing::neg(const Value& a) const {
  return make(base_->neg(a.parts[0]), ideal_ring_->neg(a.parts[1]));
}

Value ExcisionRing::mul(const Value& a, const Value& b) const {
  const Ring& A = *ideal_ring_;
  const Value& r = a.parts[0];
  const Value& i = a.parts[1];
  const Value& s = b.parts[0];
  const Value& j = b.parts[1];
  Value second = A.add(A.add(A.mul(embed(r), j), A.mul(embed(s), i)), A.mul(i, j));
  return make(base_->mul(r, s), std::move(second));
}

Value ExcisionRing::from_integer(const Integer& n) const {
  return make(base_->from_integer(n), ideal_ring_->zero());
}

std::optional<Value> ExcisionRing::inverse(const Value& a) const {
  auto r_inv = base_->inverse(a.parts[0]);
  if (!r_inv) return std::nullopt;
  auto total_inv = ideal_ring_->inverse(ideal_ring_->add(embed(a.parts[0]), a.parts[1]));
  if (!total_inv) return std::nullopt;
  return make(*r_inv, ideal_ring_->sub(*total_inv, embed(*r_inv)));
}

bool ExcisionRing::is_finite() const { return base_->is_finite() && ideal_ring_->is_finite(); }

std::size_t ExcisionRing::cardinality() const {
  if (!is_finite()) fail(ErrorCode::InfiniteRing, "ring is infinite: " + key());
  return base_->cardinality() * ideal_->closure().size();
}

std::vector<Value> ExcisionRing::elements() const {
  std::size_t n = cardinality();
  std::vector<Value> out;
  out.reserve(n);
  for (const auto& r : base_->elements()) {
    for (const auto& i : ideal_->closure()) out.push_back(make(r, i));
  }
  return out;
}

std::string ExcisionRing::format(const Value& a) const {
  return "(" + base_->format(a.parts[0]) + "|" + ideal_ring_->format(a.parts[1]) + ")";
}

Value ExcisionRing::parse(std::string_view text_in) const {
  std::string s = text::strip_spaces(text_in);
  if (text::is_integer_literal(s)) return from_integer(text::parse_integer(s));
  auto p = parse_tuple({base_, ideal_ring_}, s);
  if (!ideal_->contains(p[1])) fail(ErrorCode::ParseError, "second component of '" + s + "' is not in the ideal");
  return make(std::move(p[0]), std::move(p[1]));
}

bool ExcisionRing::contains(const Value& a) const {
  if (!clean_parts(a) || a.parts.size() != 2) return false;
  return base_->contains(a.parts[0]) && ideal_ring_->contains(a.parts[1]) && ideal_->contains(a.parts[1]);
}

// ---- double ring ------------------------------------------------------------

DoubleRing::DoubleRing(RingSpec spec) : Ring(std::move(spec)) {
  const RingSpec& s = this->spec();
  if (s.children.size() != 1) fail(ErrorCode::MalformedSpec, "double ring needs exactly one base ring");
  base_ = make_ring(s.children.front());
  ideal_.emplace(Ideal::parse(base_, s.generators));
}

Value DoubleRing::make(Value a, Value b) const { return parts_value({std::move(a), std::move(b)}); }

Value DoubleRing::zero() const { return make(base_->zero(), base_->zero()); }
Value DoubleRing::one() const { return make(base_->one(), base_->one()); }
Value DoubleRing::add(const Value& a, const Value& b) const {
  return make(base_->add(a.parts[0], b.parts[0]), base_->add(a.parts[1], b.parts[1]));
}
Value DoubleRing::neg(const Value& a) const { return make(base_->neg(a.parts[0]), base_->neg(a.parts[1])); }
Value DoubleRing::mul(const Value& a, const Value& b) const {
  return make(base_->mul(a.parts[0], b.parts[0]), base_->mul(a.parts[1], b.parts[1]));
}
Value DoubleRing::from_integer(const Integer& n) const {
  Value x = base_->from_integer(n);
  return make(x, x);
}

std::optional<Value> DoubleRing::inverse(const Value& a) const {
  auto x = base_->inverse(a.parts[0]);
  auto y = base_->inverse(a.parts[1]);
  if (!x || !y) return std::nullopt;
  return make(std::move(*x), std::move(*y));
}

bool DoubleRing::is_finite() const { return base_->is_finite(); }

std::size_t DoubleRing::cardinality() const {
  if (!is_finite()) fail(ErrorCode::InfiniteRing, "ring is infinite: " + key());
  return base_->cardinality() * ideal_->closure().size();
}

std::vector<Value> DoubleRing::elements() const {
  cardinality();
  auto elems = base_->elements();
  std::vector<Value> out;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      if (ideal_->contains(base_->sub(a, b))) out.push_back(make(a, b));
    }
  }
  return out;
}

std::string DoubleRing::format(const Value& a) const {
  return "(" + base_->format(a.parts[0]) + "|" + base_->format(a.parts[1]) + ")";
}

Value DoubleRing::parse(std::string_view text_in) const {
  std::string s = text::strip_spaces(text_in);
  if (text::is_integer_literal(s)) return from_integer(text::parse_integer(s));
  auto p = parse_tuple({base_, base_}, s);
  if (!ideal_->contains(base_->sub(p[0], p[1]))) {
    fail(ErrorCode::ParseError, "components of '" + s + "' do not agree modulo the ideal");
  }
  return make(std::move(p[0]), std::move(p[1]));
}

bool DoubleRing::contains(const Value& a) const {
  if (!clean_parts(a) || a.parts.size() != 2) return false;
  return base_->contains(a.parts[0]) && base_->contains(a.parts[1]) &&
         ideal_->contains(base_->sub(a.parts[0], a.parts[1]));
}

// ---- Rees algebras ----------------------------------------------------------

ReesRing::ReesRing(RingSpec spec) : Ring(std::move(spec)) {
  const RingSpec& s = this->spec();
  if (s.children.size() != 1) fail(ErrorCode::MalformedSpec, "Rees algebra needs exactly one base ring");
  if (s.var.empty()) fail(ErrorCode::MalformedSpec, "Rees algebra variable name is empty");
  base_ = make_ring(s.children.front());
  ambient_ = std::static_pointer_cast<const LaurentRing>(make_ring(RingSpec::laurent(s.children.front(), s.var)));
  ideal_.emplace(Ideal::parse(base_, s.generators));
}

Value ReesRing::make_unchecked(upoly::Coeffs c, std::int64_t low) const { return ambient_->make(std::move(c), low); }

Value ReesRing::zero() const { return ambient_->zero(); }
Value ReesRing::one() const { return ambient_->one(); }
Value ReesRing::add(const Value& a, const Value& b) const { return ambient_->add(a, b); }
Value ReesRing::neg(const Value& a) const { return ambient_->neg(a); }
Value ReesRing::mul(const Value& a, const Value& b) const { return ambient_->mul(a, b); }
Value ReesRing::from_integer(const Integer& n) const { return ambient_->from_integer(n); }

std::optional<Value> ReesRing::inverse(const Value& a) const {
  auto inv = ambient_->inverse(a);
  if (inv && contains(*inv)) return inv;
  return std::nullopt;
}

std::string ReesRing::format(const Value& a) const { return ambient_->format(a); }

Value ReesRing::parse(std::string_view text) const {
  Value v = ambient_->parse(text);
  if (!contains(v)) fail(ErrorCode::ParseError, "'" + std::string(text) + "' is not in the Rees algebra");
  return v;
}

bool ReesRing::contains(const Value& a) const {
  if (!ambient_->contains(a)) return false;
  for (std::size_t k = 0; k < a.parts.size(); ++k) {
    std::int64_t e = a.low + static_cast<std::int64_t>(k);
    if (base_->is_zero(a.parts[k])) continue;
    if (e < 0 && !extended()) return false;
    if (e >= 1 && !ideal_->power(static_cast<std::size_t>(e)).contains(a.parts[k])) return false;
  }
  return true;
}

}  // namespace detail

// ---- construction -----------------------------------------------------------

namespace {

RingPtr build_ring(const RingSpec& spec) {
  using namespace detail;
  switch (spec.kind) {
    case RingKind::Integers:
      return std::make_shared<IntegersRing>();
    case RingKind::Rationals:
      return std::make_shared<RationalsRing>();
    case RingKind::Modular:
      return std::make_shared<ModularRing>(spec);
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      if (spec.children.size() != 1) fail(ErrorCode::MalformedSpec, "polynomial ring needs exactly one base ring");
      RingPtr base = make_ring(spec.children.front());
      if (spec.kind == RingKind::Polynomial) return std::make_shared<PolynomialRing>(spec, base);
      return std::make_shared<LaurentRing>(spec, base);
    }
    case RingKind::Quotient:
      return std::make_shared<QuotientRing>(spec);
    case RingKind::Product:
      return std::make_shared<ProductRing>(spec);
    case RingKind::Excision:
      return std::make_shared<ExcisionRing>(spec);
    case RingKind::Double:
      return std::make_shared<DoubleRing>(spec);
    case RingKind::Rees:
    case RingKind::ExtendedRees:
      return std::make_shared<ReesRing>(spec);
  }
  fail(ErrorCode::MalformedSpec, "unknown ring kind");
}

}  // namespace

RingPtr make_ring(const RingSpec& spec) {
  static std::mutex mutex;
  static std::map<std::string, RingPtr> cache;
  std::string key = spec_to_json(spec).dump();
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RingPtr ring = build_ring(spec);
  std::lock_guard lock(mutex);
  return cache.emplace(key, ring).first->second;
}

// ---- elements ---------------------------------------------------------------

Element::Element(RingPtr ring, Value value) : ring_(std::move(ring)), value_(std::move(value)) {}

std::optional<Element> Element::inverse() const {
  auto inv = ring_->inverse(value_);
  if (!inv) return std::nullopt;
  return Element(ring_, std::move(*inv));
}

Element operator+(const Element& a, const Element& b) {
  require_same_ring(*a.ring_, *b.ring_, "addition");
  return {a.ring_, a.ring_->add(a.value_, b.value_)};
}

Element operator-(const Element& a, const Element& b) {
  require_same_ring(*a.ring_, *b.ring_, "subtraction");
  return {a.ring_, a.ring_->sub(a.value_, b.value_)};
}

Element operator*(const Element& a, const Element& b) {
  require_same_ring(*a.ring_, *b.ring_, "multiplication");
  return {a.ring_, a.ring_->mul(a.value_, b.value_)};
}

Element operator-(const Element& a) { return {a.ring_, a.ring_->neg(a.value_)}; }

bool operator==(const Element& a, const Element& b) { return same_ring(*a.ring_, *b.ring_) && a.value_ == b.value_; }

bool same_ring(const Ring& a, const Ring& b) noexcept { return &a == &b || a.key() == b.key(); }

void require_same_ring(const Ring& a, const Ring& b, std::string_view what) {
  if (!same_ring(a, b)) fail(ErrorCode::RingMismatch, std::string(what) + " across different rings");
}

Element parse_element(const RingPtr& ring, std::string_view text) { return {ring, ring->parse(text)}; }

Element integer_element(const RingPtr& ring, const Integer& n) { return {ring, ring->from_integer(n)}; }

}  // namespace relwitt
