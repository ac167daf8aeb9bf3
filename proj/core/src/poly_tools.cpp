#include "relwitt/poly_tools.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "relwitt/tower.hpp"
#include "text_util.hpp"

namespace relwitt {

MPoly::MPoly(RingPtr ring, std::size_t nvars) : ring_(std::move(ring)), nvars_(nvars) {}

MPoly MPoly::constant(RingPtr ring, std::size_t nvars, const Value& c) {
  MPoly p(std::move(ring), nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(RingPtr ring, std::size_t nvars, std::size_t k) {
  if (k < 1 || k > nvars) fail(ErrorCode::IndexOutOfRange, "variable index out of range");
  MPoly p(ring, nvars);
  Exponents e(nvars, 0);
  e[k - 1] = 1;
  p.add_term(e, ring->one());
  return p;
}

MPoly MPoly::in_x1(RingPtr ring, std::size_t nvars, const upoly::Coeffs& c) {
  MPoly p(std::move(ring), nvars);
  for (std::size_t k = 0; k < c.size(); ++k) {
    Exponents e(nvars, 0);
    e[0] = static_cast<std::uint32_t>(k);
    p.add_term(e, c[k]);
  }
  return p;
}

void MPoly::add_term(const Exponents& e, const Value& c) {
  if (e.size() != nvars_) fail(ErrorCode::ShapeMismatch, "monomial has the wrong number of variables");
  if (ring_->is_zero(c)) return;
  auto it = terms_.lower_bound(e);
  if (it == terms_.end() || it->first != e) {
    terms_.emplace_hint(it, e, c);
    return;
  }
  it->second = ring_->add(it->second, c);
  if (ring_->is_zero(it->second)) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& b) {
  require_same_ring(*ring_, *b.ring_, "polynomial sum");
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  out += b;
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + b.scaled(a.ring_->neg(a.ring_->one())); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same_ring(*a.ring_, *b.ring_, "polynomial product");
  MPoly out(a.ring_, a.nvars_);
  const Ring& R = *a.ring_;
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, R.mul(ca, cb));
    }
  }
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return same_ring(*a.ring_, *b.ring_) && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MPoly MPoly::scaled(const Value& s) const {
  MPoly out(ring_, nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, ring_->mul(c, s));
  return out;
}

MPoly MPoly::pow(std::uint64_t k) const {
  MPoly result = constant(ring_, nvars_, ring_->one());
  MPoly sq = *this;
  while (k > 0) {
    if (k & 1U) result = result * sq;
    k >>= 1U;
    if (k > 0) sq = sq * sq;
  }
  return result;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (images.size() != nvars_) fail(ErrorCode::ShapeMismatch, "substitution needs one image per variable");
  // Powers of each image, computed on demand.
  std::vector<std::vector<MPoly>> powers(nvars_);
  auto power_of = [&](std::size_t k, std::uint32_t e) -> const MPoly& {
    auto& list = powers[k];
    if (list.empty()) list.push_back(constant(ring_, images[k].nvars(), ring_->one()));
    while (list.size() <= e) list.push_back(list.back() * images[k]);
    return list[e];
  };
  MPoly out(ring_, images.empty() ? nvars_ : images.front().nvars());
  for (const auto& [e, c] : terms_) {
    MPoly term = constant(ring_, out.nvars(), c);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] > 0) term = term * power_of(k, e[k]);
    }
    out += term;
  }
  return out;
}

long MPoly::degree_x1() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[0]));
  return d;
}

bool MPoly::is_monic_x1() const {
  long d = degree_x1();
  if (d < 0) return false;
  std::size_t top = 0;
  for (const auto& [e, c] : terms_) {
    if (static_cast<long>(e[0]) != d) continue;
    ++top;
    bool pure = std::all_of(e.begin() + 1, e.end(), [](std::uint32_t x) { return x == 0; });
    if (!pure || c != ring_->one()) return false;
  }
  return top == 1;
}

std::string MPoly::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "X" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    std::string coeff = ring_->format(c);
    bool atomic = ring_->kind() == RingKind::Integers || ring_->kind() == RingKind::Modular ||
                  ring_->kind() == RingKind::Rationals;
    if (!atomic) coeff = "[" + coeff + "]";
    std::string term;
    if (mono.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = mono;
    } else if (coeff == "-1") {
      term = "-" + mono;
    } else {
      term = coeff + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

MPoly MPoly::parse(RingPtr ring, std::size_t nvars, std::string_view text_in) {
  std::string s = text::strip_spaces(text_in);
  if (s.empty()) fail(ErrorCode::ParseError, "empty polynomial");
  MPoly out(ring, nvars);
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (depth == 0 && i > 0 && (ch == '+' || ch == '-') && s[i - 1] != '^' && s[i - 1] != '*' && s[i - 1] != '/') {
      terms.push_back(cur);
      cur.clear();
      if (ch == '+') continue;
    }
    cur.push_back(ch);
  }
  terms.push_back(cur);
  for (std::string term : terms) {
    bool negative = !term.empty() && term.front() == '-';
    if (negative) term.erase(0, 1);
    if (term.empty()) fail(ErrorCode::ParseError, "empty term in '" + s + "'");
    Exponents e(nvars, 0);
    Value c = ring->one();
    for (const auto& factor : text::split_top_level(term, '*')) {
      if (factor.size() >= 2 && factor[0] == 'X' && std::isdigit(static_cast<unsigned char>(factor[1]))) {
        auto caret = factor.find('^');
        std::size_t k = std::stoul(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        if (k < 1 || k > nvars) fail(ErrorCode::ParseError, "variable out of range in '" + factor + "'");
        std::uint32_t p = 1;
        if (caret != std::string::npos) p = static_cast<std::uint32_t>(std::stoul(factor.substr(caret + 1)));
        e[k - 1] += p;
      } else {
        std::string_view f = factor;
        if (f.size() >= 2 && f.front() == '[' && f.back() == ']') f = f.substr(1, f.size() - 2);
        c = ring->mul(c, ring->parse(f));
      }
    }
    out.add_term(e, negative ? ring->neg(c) : c);
  }
  return out;
}

std::vector<MPoly> Substitution::images(bool inverse) const {
  std::vector<MPoly> out;
  out.push_back(MPoly::variable(field, nvars, 1));
  MPoly p = MPoly::in_x1(field, nvars, phi);
  for (std::size_t k = 2; k <= nvars; ++k) {
    MPoly shift = p.pow(r.at(k - 2));
    MPoly x = MPoly::variable(field, nvars, k);
    out.push_back(inverse ? x - shift : x + shift);
  }
  return out;
}

MPoly Substitution::apply(const MPoly& f, bool inverse) const { return f.substitute(images(inverse)); }

NagataResult nagata_transform(const MPoly& f, const upoly::Coeffs& phi) {
  const RingPtr& k = f.ring();
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "Nagata transform of the zero polynomial");
  if (!k->is_field()) fail(ErrorCode::MalformedSpec, "Nagata transform needs a field");
  if (phi.size() < 2 || phi.back() != k->one()) fail(ErrorCode::MalformedSpec, "phi must be monic of positive degree");
  const std::uint64_t n = phi.size() - 1;
  const std::size_t d = f.nvars();

  std::uint64_t top = 0;
  for (const auto& [e, c] : f.terms()) {
    for (auto x : e) top = std::max<std::uint64_t>(top, n * x);
  }
  NagataResult out{{k, d, phi, {}}, top + 1, k->zero(), MPoly(k, d)};
  std::uint64_t rj = 1;
  for (std::size_t j = 2; j <= d; ++j) {
    rj *= out.m;
    out.substitution.r.push_back(rj);
  }

  // Leading X1-degree of each substituted monomial; the m-adic digits make them distinct.
  std::set<std::uint64_t> degrees;
  std::uint64_t best_degree = 0;
  Value best_coeff = k->zero();
  for (const auto& [e, c] : f.terms()) {
    std::uint64_t deg = e[0];
    for (std::size_t j = 2; j <= d; ++j) deg += n * out.substitution.r[j - 2] * e[j - 1];
    if (!degrees.insert(deg).second) fail(ErrorCode::VerificationFailed, "two monomials share a leading X1-degree");
    if (degrees.size() == 1 || deg > best_degree) {
      best_degree = deg;
      best_coeff = c;
    }
  }
  out.c = best_coeff;
  auto c_inv = k->inverse(out.c);
  if (!c_inv) fail(ErrorCode::VerificationFailed, "leading coefficient is not a unit");

  MPoly g = out.substitution.apply(f);
  out.h = g.scaled(*c_inv);
  if (!out.h.is_monic_x1() || out.h.degree_x1() != static_cast<long>(best_degree)) {
    fail(ErrorCode::VerificationFailed, "substituted polynomial is not c times a monic polynomial");
  }
  if (!(out.substitution.apply(g, true) == f)) fail(ErrorCode::VerificationFailed, "inverse substitution failed");
  return out;
}

bool is_weierstrass(const Element& f, const Ideal& m) {
  RingPtr base = coefficient_ring(*f.ring());
  if (f.ring()->kind() != RingKind::Polynomial) fail(ErrorCode::RingMismatch, "expected a univariate polynomial");
  require_same_ring(*base, *m.ring(), "Weierstrass test");
  const auto& c = f.value().parts;
  if (c.empty() || c.back() != base->one()) return false;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    if (!m.contains(c[k])) return false;
  }
  return true;
}

}  // namespace relwitt
