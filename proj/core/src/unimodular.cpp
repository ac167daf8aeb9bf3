#include "relwitt/unimodular.hpp"

#include <algorithm>
#include <map>

#include "relwitt/finite_ring.hpp"
#include "relwitt/intmath.hpp"
#include "relwitt/tower.hpp"

namespace relwitt {

namespace {

using Digits = std::vector<Idx>;

// Lexicographically first b with sum a_k b_k = 1 and b_k drawn from cand[k].
// suffix[k] marks the sums reachable by coordinates k..n-1.
std::optional<Digits> first_solution(const FiniteRing& F, const Digits& a, const std::vector<Digits>& cand) {
  const std::size_t n = a.size();
  const std::size_t q = F.size();
  std::vector<std::vector<bool>> suffix(n + 1, std::vector<bool>(q, false));
  suffix[n][F.zero()] = true;
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t s = 0; s < q; ++s) {
      if (!suffix[k + 1][s]) continue;
      for (Idx b : cand[k]) suffix[k][F.add(static_cast<Idx>(s), F.mul(a[k], b))] = true;
    }
  }
  if (!suffix[0][F.one()]) return std::nullopt;
  Digits out;
  Idx target = F.one();
  for (std::size_t k = 0; k < n; ++k) {
    for (Idx b : cand[k]) {
      Idx rest = F.sub(target, F.mul(a[k], b));
      if (suffix[k + 1][rest]) {
        out.push_back(b);
        target = rest;
        break;
      }
    }
  }
  return out;
}

Digits to_digits(const FiniteRing& F, const UmRow& v) {
  Digits d;
  d.reserve(v.size());
  for (const auto& e : v.entries) d.push_back(F.index(e));
  return d;
}

UmRow from_digits(const FiniteRing& F, const Digits& d) {
  UmRow row{F.ring(), {}};
  for (Idx x : d) row.entries.push_back(F.value(x));
  return row;
}

Digits all_indices(const FiniteRing& F) {
  Digits d(F.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = static_cast<Idx>(k);
  return d;
}

std::optional<UmRow> complete_integers(const UmRow& v) {
  Integer g = 0;
  std::vector<Integer> b;
  for (const auto& e : v.entries) {
    ExtGcd r = ext_gcd(g, e.num);
    for (auto& x : b) x *= r.x;
    b.push_back(r.y);
    g = r.g;
  }
  if (g != 1) return std::nullopt;
  UmRow out{v.ring, {}};
  for (const auto& x : b) out.entries.push_back(v.ring->from_integer(x));
  return out;
}

void check_length3(const UmRow& a, const UmRow& b) {
  if (a.size() != 3 || b.size() != 3) fail(ErrorCode::SizeMismatch, "theta needs rows of length 3");
  require_same_ring(*a.ring, *b.ring, "theta");
}

std::optional<Value> find_p0(const UmRow& u, const std::optional<Ideal>& ideal) {
  const Ring& R = *u.ring;
  const Value& a0 = u.entries[0];
  std::vector<Value> tail(u.entries.begin() + 1, u.entries.end());
  if (R.is_finite()) {
    auto F = FiniteRing::of(u.ring);
    FiniteIdeal T(*F, Ideal(u.ring, tail));
    std::optional<FiniteIdeal> J;
    if (ideal) J.emplace(*F, *ideal);
    for (std::size_t p = 0; p < F->size(); ++p) {
      Idx pi = static_cast<Idx>(p);
      if (!T.contains(F->sub(F->mul(F->index(a0), pi), F->one()))) continue;
      if (J && !J->contains(F->sub(pi, F->one()))) continue;
      return F->value(pi);
    }
    return std::nullopt;
  }
  if (R.kind() == RingKind::Integers) {
    Integer g = 0;
    for (const auto& x : tail) g = gcd(g, x.num);
    Integer m = 0;
    if (ideal) {
      for (const auto& x : ideal->generators()) m = gcd(m, x.num);
    }
    auto ok = [&](const Integer& p) {
      Integer r = a0.num * p - 1;
      return g == 0 ? r == 0 : floor_mod(r, g) == 0;
    };
    if (m == 0 && ideal) {
      if (ok(1)) return R.one();
      return std::nullopt;
    }
    if (g == 0) {
      if (a0.num == 1 || a0.num == -1) {
        if (!ideal || m == 1 || floor_mod(a0.num - 1, m) == 0) return R.from_integer(a0.num);
      }
      return std::nullopt;
    }
    Integer start = ideal ? Integer(1) : Integer(0);
    Integer step = ideal ? m : Integer(1);
    for (Integer k = 0; k < g; ++k) {
      Integer p = start + k * step;
      if (ok(p)) return R.from_integer(p);
    }
    return std::nullopt;
  }
  for (const auto& x : tail) {
    if (R.is_unit(x)) return ideal ? R.one() : R.zero();
  }
  return std::nullopt;
}

Code tail_code(Code c, Code modulus) { return c % modulus; }

}  // namespace

std::optional<UmRow> complete(const UmRow& v) {
  const Ring& R = *v.ring;
  if (R.is_finite()) {
    auto F = FiniteRing::of(v.ring);
    Digits a = to_digits(*F, v);
    std::vector<Digits> cand(v.size(), all_indices(*F));
    auto b = first_solution(*F, a, cand);
    if (!b) return std::nullopt;
    return from_digits(*F, *b);
  }
  if (R.kind() == RingKind::Integers) return complete_integers(v);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (auto inv = R.inverse(v.entries[k])) {
      UmRow b{v.ring, std::vector<Value>(v.size(), R.zero())};
      b.entries[k] = *inv;
      return b;
    }
  }
  if (R.is_field()) return std::nullopt;
  fail(ErrorCode::UndecidableCompletion, "no completion procedure for " + R.key());
}

bool is_unimodular(const UmRow& v) { return complete(v).has_value(); }

std::optional<UmRow> complete_relative(const UmRow& v, const Ideal& ideal) {
  if (!is_relative(v, ideal)) fail(ErrorCode::NotRelative, "row is not congruent to e_1 modulo the ideal");
  const Ring& R = *v.ring;
  std::optional<UmRow> a;
  if (R.is_finite()) {
    auto F = FiniteRing::of(v.ring);
    FiniteIdeal I(*F, ideal);
    std::vector<Digits> cand(v.size(), I.members());
    for (auto& x : cand[0]) x = F->add(F->one(), x);
    std::sort(cand[0].begin(), cand[0].end());
    auto b = first_solution(*F, to_digits(*F, v), cand);
    if (!b) return std::nullopt;
    a = from_digits(*F, *b);
  } else {
    auto c = complete(v);
    if (!c) return std::nullopt;
    Value s = R.sub(R.one(), v.entries[0]);
    a = UmRow{v.ring, {}};
    for (std::size_t k = 0; k < v.size(); ++k) {
      Value e = R.mul(s, c->entries[k]);
      if (k == 0) e = R.add(e, R.one());
      a->entries.push_back(e);
    }
  }
  if (!(dot(*a, v) == integer_element(v.ring, 1)) || !is_relative(*a, ideal)) {
    fail(ErrorCode::VerificationFailed, "relative completion failed its check");
  }
  return a;
}

Matrix theta_raw(const UmRow& a, const UmRow& b) {
  check_length3(a, b);
  const Ring& R = *a.ring;
  auto n = [&](const Value& x) { return R.neg(x); };
  const auto& A = a.entries;
  const auto& B = b.entries;
  Value z = R.zero();
  return Matrix(a.ring, 4, 4,
                {z, n(B[0]), n(B[1]), n(B[2]),
                 B[0], z, n(A[2]), A[1],
                 B[1], A[2], z, n(A[0]),
                 B[2], n(A[1]), A[0], z});
}

Matrix theta(const UmRow& a, const UmRow& b) {
  check_length3(a, b);
  if (!(dot(a, b) == integer_element(a.ring, 1))) fail(ErrorCode::NotCompleted, "theta needs a . b = 1");
  return theta_raw(a, b);
}

GroupWord theta_independence_cert(const UmRow& a, const UmRow& c, const UmRow& b) {
  Matrix ta = theta(a, b);
  Matrix tc = theta(c, b);
  const Ring& R = *a.ring;
  const auto& A = a.entries;
  const auto& C = c.entries;
  auto cross = [&](std::size_t p, std::size_t q) { return R.sub(R.mul(C[p], A[q]), R.mul(C[q], A[p])); };
  GroupWord eps(a.ring, 4);
  eps.push(Elem{1, 2, cross(2, 1)});
  eps.push(Elem{1, 3, cross(0, 2)});
  eps.push(Elem{1, 4, cross(1, 0)});
  Matrix e = eps.evaluate();
  if (!(e.transpose() * ta * e == tc)) fail(ErrorCode::VerificationFailed, "theta independence identity failed");
  return eps;
}

WittSymbol vaserstein_symbol(const UmRow& v, const Ideal& ideal) {
  if (v.size() != 3) fail(ErrorCode::SizeMismatch, "the Vaserstein symbol needs a row of length 3");
  auto a = complete_relative(v, ideal);
  if (!a) fail(ErrorCode::NoRelativeCompletionFound, "no relative completion in the coset e_1 + I^3");
  return make_symbol(theta(*a, v), ideal);
}

UmRow vdk_product(const UmRow& u, const UmRow& v, const std::optional<Ideal>& ideal) {
  require_same_ring(*u.ring, *v.ring, "vdk product");
  if (u.size() != v.size() || u.size() < 2) fail(ErrorCode::SizeMismatch, "vdk product needs rows of one length >= 2");
  if (!std::equal(u.entries.begin() + 1, u.entries.end(), v.entries.begin() + 1)) {
    fail(ErrorCode::TailAlignmentFailed, "rows do not share a tail");
  }
  auto p0 = find_p0(u, ideal);
  if (!p0) fail(ErrorCode::NoP0Found, "no p0 with a0 p0 = 1 modulo the tail");
  const Ring& R = *u.ring;
  Value s = R.add(v.entries[0], *p0);
  UmRow out = u;
  out.entries[0] = R.sub(R.mul(u.entries[0], s), R.one());
  out.entries[1] = R.mul(s, u.entries[1]);
  if (!is_unimodular(out)) fail(ErrorCode::VerificationFailed, "vdk product is not unimodular");
  return out;
}

UmRow vdk_product(const UmRow& u, const UmRow& v, const OrbitPartition& orbits, const std::optional<Ideal>& ideal) {
  require_same_ring(*u.ring, *v.ring, "vdk product");
  if (u.size() != v.size() || u.size() < 2) fail(ErrorCode::SizeMismatch, "vdk product needs rows of one length >= 2");
  if (std::equal(u.entries.begin() + 1, u.entries.end(), v.entries.begin() + 1)) return vdk_product(u, v, ideal);
  if (orbits.action != Action::Row || orbits.n != u.size()) {
    fail(ErrorCode::SizeMismatch, "orbit partition does not match the rows");
  }
  ObjectCodec codec(FiniteRing::of(u.ring), Action::Row, u.size());
  auto ou = orbits.orbit_of(codec.from_row(u));
  auto ov = orbits.orbit_of(codec.from_row(v));
  if (!ou || !ov) fail(ErrorCode::TailAlignmentFailed, "row outside the orbit partition");
  Code modulus = 1;
  for (std::size_t k = 1; k < u.size(); ++k) modulus *= codec.ring().size();
  std::map<Code, Code> first_by_tail;
  for (Code c : orbits.members(*ov)) first_by_tail.emplace(tail_code(c, modulus), c);
  for (Code c : orbits.members(*ou)) {
    auto it = first_by_tail.find(tail_code(c, modulus));
    if (it != first_by_tail.end()) return vdk_product(codec.to_row(c), codec.to_row(it->second), ideal);
  }
  fail(ErrorCode::TailAlignmentFailed, "the two orbits share no tail");
}

bool nice_mult_check(const Value& a, const Value& b, const std::vector<Value>& tail, const OrbitPartition& orbits,
                     const std::optional<Ideal>& ideal) {
  const RingPtr& ring = orbits.ring;
  auto row = [&](const Value& head) {
    UmRow r{ring, {head}};
    r.entries.insert(r.entries.end(), tail.begin(), tail.end());
    return r;
  };
  UmRow ua = row(a), ub = row(b), uab = row(ring->mul(a, b));
  for (const UmRow* r : {&ua, &ub, &uab}) {
    if (!is_unimodular(*r) || (ideal && !is_relative(*r, *ideal))) {
      fail(ErrorCode::NotUnimodular, "nice multiplication needs unimodular rows");
    }
  }
  UmRow p = vdk_product(ub, ua, orbits, ideal);
  ObjectCodec codec(FiniteRing::of(ring), Action::Row, p.size());
  auto op = orbits.orbit_of(codec.from_row(p));
  auto ot = orbits.orbit_of(codec.from_row(uab));
  if (!op || !ot) fail(ErrorCode::VerificationFailed, "product row outside the orbit partition");
  return *op == *ot;
}

UmRow tilde_row_lift(const UmRow& v, const Ideal& ideal, bool integer_base) {
  if (!is_relative(v, ideal)) fail(ErrorCode::NotRelative, "row is not congruent to e_1 modulo the ideal");
  RingPtr X = integer_base ? integer_excision_ring(v.ring, ideal) : excision_ring(v.ring, ideal);
  RingPtr base = tower_base(*X);
  RingPtr iring = tower_ideal_ring(*X);
  const Ring& R = *v.ring;
  UmRow out{X, {}};
  for (std::size_t k = 0; k < v.size(); ++k) {
    Element r = integer_element(base, k == 0 ? 1 : 0);
    Value i = k == 0 ? R.sub(v.entries[k], R.one()) : v.entries[k];
    out.entries.push_back(excision_element(X, r, Element(iring, i)).value());
  }
  return out;
}

UmRow excision_map_f(const UmRow& v) {
  if (v.ring->kind() != RingKind::Excision) fail(ErrorCode::RingMismatch, "excision_map_f needs an excision ring");
  UmRow out{tower_ideal_ring(*v.ring), {}};
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.entries.push_back(excision_project(v.at(k), Projection::Retract).value());
  }
  return out;
}

std::optional<StableRangeResult> stable_range_reduce(const UmRow& v, const Ideal& ideal, std::size_t n) {
  if (n == 0 || v.size() < n) fail(ErrorCode::SizeMismatch, "target length must be between 1 and the row length");
  auto F = FiniteRing::of(v.ring);
  FiniteIdeal I(*F, ideal);
  const auto& members = I.members();
  StableRangeResult result{v, {}};
  while (result.row.size() > n) {
    const UmRow& cur = result.row;
    std::size_t k = cur.size() - 1;
    Digits a = to_digits(*F, cur);
    std::vector<std::size_t> pos(k, 0);
    std::optional<UmRow> found;
    Digits c(k);
    while (true) {
      Digits w(k);
      for (std::size_t j = 0; j < k; ++j) {
        c[j] = members[pos[j]];
        w[j] = F->add(a[j], F->mul(c[j], a[k]));
      }
      UmRow cand = from_digits(*F, w);
      if (is_unimodular(cand) && is_relative(cand, ideal)) {
        found = std::move(cand);
        break;
      }
      std::size_t j = k;
      while (j > 0 && ++pos[j - 1] == members.size()) pos[--j] = 0;
      if (j == 0) break;
    }
    if (!found) return std::nullopt;
    StableRangeStep step;
    for (Idx x : c) step.c.push_back(F->value(x));
    result.steps.push_back(std::move(step));
    result.row = std::move(*found);
  }
  return result;
}

}  // namespace relwitt
