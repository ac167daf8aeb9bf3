#include "relwitt/upoly.hpp"

#include <algorithm>
#include <map>

#include "text_util.hpp"

namespace relwitt::upoly {

void trim(const Ring& base, Coeffs& c) {
  while (!c.empty() && base.is_zero(c.back())) c.pop_back();
}

Coeffs add(const Ring& base, const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), base.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = base.add(out[i], b[i]);
  trim(base, out);
  return out;
}

Coeffs neg(const Ring& base, const Coeffs& a) {
  Coeffs out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(base.neg(x));
  return out;
}

Coeffs sub(const Ring& base, const Coeffs& a, const Coeffs& b) { return add(base, a, neg(base, b)); }

Coeffs mul(const Ring& base, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, base.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (base.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = base.add(out[i + j], base.mul(a[i], b[j]));
    }
  }
  trim(base, out);
  return out;
}

Coeffs scale(const Ring& base, const Coeffs& a, const Value& s) {
  Coeffs out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(base.mul(x, s));
  trim(base, out);
  return out;
}

Coeffs pow(const Ring& base, const Coeffs& a, std::uint64_t k) {
  Coeffs result{base.one()};
  trim(base, result);
  Coeffs sq = a;
  while (k > 0) {
    if (k & 1U) result = mul(base, result, sq);
    k >>= 1U;
    if (k > 0) sq = mul(base, sq, sq);
  }
  return result;
}

long degree(const Coeffs& c) { return static_cast<long>(c.size()) - 1; }

std::pair<Coeffs, Coeffs> divmod(const Ring& base, const Coeffs& f, const Coeffs& g) {
  if (g.empty()) fail(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  auto lead_inv = base.inverse(g.back());
  if (!lead_inv) fail(ErrorCode::NotAUnit, "divisor leading coefficient is not a unit");
  Coeffs r = f;
  trim(base, r);
  if (r.size() < g.size()) return {{}, r};
  Coeffs q(r.size() - g.size() + 1, base.zero());
  while (!r.empty() && r.size() >= g.size()) {
    std::size_t shift = r.size() - g.size();
    Value factor = base.mul(r.back(), *lead_inv);
    q[shift] = factor;
    for (std::size_t i = 0; i < g.size(); ++i) {
      r[shift + i] = base.sub(r[shift + i], base.mul(factor, g[i]));
    }
    trim(base, r);
  }
  trim(base, q);
  return {q, r};
}

std::optional<Coeffs> exact_divide_integers(const Coeffs& f, const Coeffs& g) {
  auto is_zero = [](const Value& v) { return v.num == 0; };
  Coeffs r = f;
  while (!r.empty() && is_zero(r.back())) r.pop_back();
  if (g.empty()) return std::nullopt;
  if (r.empty()) return Coeffs{};
  if (r.size() < g.size()) return std::nullopt;
  Coeffs q(r.size() - g.size() + 1);
  while (!r.empty()) {
    if (r.size() < g.size()) return std::nullopt;
    if (r.back().num % g.back().num != 0) return std::nullopt;
    std::size_t shift = r.size() - g.size();
    Integer factor = r.back().num / g.back().num;
    q[shift].num = factor;
    for (std::size_t i = 0; i < g.size(); ++i) r[shift + i].num -= factor * g[i].num;
    while (!r.empty() && is_zero(r.back())) r.pop_back();
  }
  while (!q.empty() && is_zero(q.back())) q.pop_back();
  return q;
}

Coeffs gcd_over_field(const Ring& base, Coeffs a, Coeffs b) {
  trim(base, a);
  trim(base, b);
  while (!b.empty()) {
    auto r = divmod(base, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  auto inv = base.inverse(a.back());
  return scale(base, a, *inv);
}

Value evaluate(const Ring& base, const Coeffs& c, const Value& x) {
  Value acc = base.zero();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = base.add(base.mul(acc, x), *it);
  return acc;
}

namespace {

bool atomic_base(const Ring& base) {
  return base.kind() == RingKind::Integers || base.kind() == RingKind::Rationals ||
         base.kind() == RingKind::Modular;
}

std::string power_text(std::string_view var, std::int64_t e) {
  std::string s(var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string term_text(const Ring& base, const Value& coeff, std::int64_t e, std::string_view var) {
  std::string c = base.format(coeff);
  if (!atomic_base(base)) {
    if (e == 0) return "[" + c + "]";
    if (coeff == base.one()) return power_text(var, e);
    return "[" + c + "]*" + power_text(var, e);
  }
  if (e == 0) return c;
  if (c == "1") return power_text(var, e);
  if (c == "-1") return "-" + power_text(var, e);
  return c + "*" + power_text(var, e);
}

// Splits a polynomial expression into signed terms.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    bool boundary = false;
    if (depth == 0 && i > 0 && (ch == '+' || ch == '-')) {
      char prev = s[i - 1];
      boundary = ch == '+' || (prev != '^' && prev != '*' && prev != '/');
    }
    if (boundary) {
      out.push_back(cur);
      cur.clear();
      if (ch == '+') continue;
    }
    cur.push_back(ch);
  }
  out.push_back(cur);
  return out;
}

// Returns the exponent when `s` is `var` or `var^k`.
std::optional<std::int64_t> match_power(std::string_view s, std::string_view var) {
  if (s.substr(0, var.size()) != var) return std::nullopt;
  std::string_view rest = s.substr(var.size());
  if (rest.empty()) return 1;
  if (rest.front() != '^') return std::nullopt;
  rest.remove_prefix(1);
  if (!text::is_integer_literal(rest)) return std::nullopt;
  return static_cast<std::int64_t>(text::parse_integer(rest));
}

Value parse_coefficient(const Ring& base, std::string_view s) {
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') return base.parse(s.substr(1, s.size() - 2));
  return base.parse(s);
}

}  // namespace

std::string format(const Ring& base, const Coeffs& c, std::int64_t low, std::string_view var) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (base.is_zero(c[k])) continue;
    std::string term = term_text(base, c[k], low + static_cast<std::int64_t>(k), var);
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

Parsed parse(const Ring& base, std::string_view text_in, std::string_view var, bool allow_negative) {
  std::string s = text::strip_spaces(text_in);
  if (s.empty()) fail(ErrorCode::ParseError, "empty polynomial");
  std::map<std::int64_t, Value> terms;
  for (std::string term : split_terms(s)) {
    if (term.empty()) fail(ErrorCode::ParseError, "empty term in '" + s + "'");
    bool negative = false;
    if (term.front() == '-') {
      negative = true;
      term.erase(0, 1);
    }
    if (term.empty()) fail(ErrorCode::ParseError, "dangling sign in '" + s + "'");
    Value coeff = base.one();
    std::int64_t e = 0;
    if (auto p = match_power(term, var)) {
      e = *p;
    } else {
      int depth = 0;
      std::size_t star = std::string::npos;
      for (std::size_t i = 0; i < term.size(); ++i) {
        if (term[i] == '(' || term[i] == '[') ++depth;
        if (term[i] == ')' || term[i] == ']') --depth;
        if (term[i] == '*' && depth == 0) star = i;
      }
      std::optional<std::int64_t> tail;
      if (star != std::string::npos) tail = match_power(std::string_view(term).substr(star + 1), var);
      if (tail) {
        e = *tail;
        coeff = parse_coefficient(base, std::string_view(term).substr(0, star));
      } else {
        coeff = parse_coefficient(base, term);
      }
    }
    if (e < 0 && !allow_negative) fail(ErrorCode::ParseError, "negative exponent in '" + s + "'");
    if (negative) coeff = base.neg(coeff);
    auto [it, inserted] = terms.emplace(e, coeff);
    if (!inserted) it->second = base.add(it->second, coeff);
  }
  Parsed out;
  out.low = terms.begin()->first;
  if (!allow_negative) out.low = 0;
  std::int64_t high = terms.rbegin()->first;
  out.coeffs.assign(static_cast<std::size_t>(high - out.low + 1), base.zero());
  for (const auto& [e, v] : terms) out.coeffs[static_cast<std::size_t>(e - out.low)] = v;
  if (allow_negative) {
    normalize_laurent(base, out.coeffs, out.low);
  } else {
    trim(base, out.coeffs);
  }
  return out;
}

void normalize_laurent(const Ring& base, Coeffs& c, std::int64_t& low) {
  trim(base, c);
  std::size_t lead = 0;
  while (lead < c.size() && base.is_zero(c[lead])) ++lead;
  if (lead == c.size()) {
    c.clear();
    low = 0;
    return;
  }
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
  low += static_cast<std::int64_t>(lead);
}

}  // namespace relwitt::upoly
