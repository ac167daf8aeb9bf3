#include "relwitt/orbit.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

#include "relwitt/unimodular.hpp"

namespace relwitt {

namespace {

using Digits = std::vector<Idx>;

struct Sparse {
  std::vector<std::pair<std::size_t, Idx>> u;
  std::vector<std::pair<std::size_t, Idx>> w;
};

Sparse sparse_of(const FiniteRing& F, const Transvection& g) {
  Sparse s;
  for (std::size_t k = 0; k < g.u.size(); ++k) {
    if (g.u[k] != F.zero()) s.u.emplace_back(k, g.u[k]);
    if (g.w[k] != F.zero()) s.w.emplace_back(k, g.w[k]);
  }
  return s;
}

// Position of entry (i, j), i < j, in the strict upper triangle.
std::size_t tri(std::size_t n, std::size_t i, std::size_t j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

// Decoded object plus the incremental update rules for one action.
class Stepper {
 public:
  explicit Stepper(const ObjectCodec& codec) : codec_(codec), F_(codec.ring()), n_(codec.n()) {
    weight_.assign(codec.digits(), 1);
    for (std::size_t k = codec.digits(); k-- > 1;) weight_[k - 1] = weight_[k] * F_.size();
    full_.assign(n_ * n_, F_.zero());
    p_.assign(n_, F_.zero());
  }

  void load(Code c) {
    code_ = c;
    digits_ = codec_.decode(c);
    if (codec_.action() == Action::Congruence) {
      for (std::size_t i = 0; i < n_; ++i) {
        full_[i * n_ + i] = F_.zero();
        for (std::size_t j = i + 1; j < n_; ++j) {
          Idx x = digits_[tri(n_, i, j)];
          full_[i * n_ + j] = x;
          full_[j * n_ + i] = F_.neg(x);
        }
      }
    }
  }

  Code apply(const Sparse& g) {
    Code out = code_;
    if (codec_.action() == Action::Row) {
      Idx s = F_.zero();
      for (auto [k, x] : g.u) s = F_.add(s, F_.mul(digits_[k], x));
      if (s == F_.zero()) return out;
      for (auto [k, x] : g.w) {
        Idx old = digits_[k];
        Idx now = F_.add(old, F_.mul(s, x));
        out = out - old * weight_[k] + now * weight_[k];
      }
      return out;
    }
    // M + p w^T - w p^T with p = M u.
    for (std::size_t i = 0; i < n_; ++i) {
      Idx s = F_.zero();
      for (auto [k, x] : g.u) s = F_.add(s, F_.mul(full_[i * n_ + k], x));
      p_[i] = s;
    }
    touched_.clear();
    for (auto [j, wj] : g.w) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (i != j) touched_.push_back(tri(n_, std::min(i, j), std::max(i, j)));
      }
    }
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    for (std::size_t pos : touched_) {
      auto [i, j] = unpack(pos);
      Idx wi = wdense(g, i), wj = wdense(g, j);
      Idx old = digits_[pos];
      Idx now = F_.sub(F_.add(old, F_.mul(p_[i], wj)), F_.mul(wi, p_[j]));
      out = out - old * weight_[pos] + now * weight_[pos];
    }
    return out;
  }

  const Digits& digits() const { return digits_; }

 private:
  std::pair<std::size_t, std::size_t> unpack(std::size_t pos) const {
    std::size_t i = 0;
    while (pos >= n_ - 1 - i) {
      pos -= n_ - 1 - i;
      ++i;
    }
    return {i, i + 1 + pos};
  }
  Idx wdense(const Sparse& g, std::size_t k) const {
    for (auto [m, x] : g.w) {
      if (m == k) return x;
    }
    return F_.zero();
  }

  const ObjectCodec& codec_;
  const FiniteRing& F_;
  std::size_t n_;
  std::vector<Code> weight_;
  Code code_ = 0;
  Digits digits_;
  Digits full_;
  Digits p_;
  std::vector<std::size_t> touched_;
};

Token layer_token(const Elem& h, const Token& g) {
  if (const auto* e = std::get_if<Elem>(&g.node)) return Token{Conjugated{{h}, *e}};
  const auto& c = std::get<Conjugated>(g.node);
  Conjugated out{{h}, c.core};
  out.conjugator.insert(out.conjugator.end(), c.conjugator.begin(), c.conjugator.end());
  return Token{std::move(out)};
}

Digits outer_key(const FiniteRing& F, const Digits& u, const Digits& w) {
  const std::size_t n = u.size();
  Digits key(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) key[i * n + j] = F.mul(u[i], w[j]);
  }
  return key;
}

bool is_zero_key(const FiniteRing& F, const Digits& key) {
  return std::all_of(key.begin(), key.end(), [&](Idx x) { return x == F.zero(); });
}

// Pfaffian by first-row expansion on index lists.
Idx pf_digits(const FiniteRing& F, const Digits& full, std::size_t n, std::vector<std::size_t>& idx) {
  if (idx.empty()) return F.one();
  std::size_t i0 = idx[0];
  Idx s = F.zero();
  for (std::size_t p = 1; p < idx.size(); ++p) {
    Idx a = full[i0 * n + idx[p]];
    if (a == F.zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t q = 1; q < idx.size(); ++q) {
      if (q != p) rest.push_back(idx[q]);
    }
    Idx term = F.mul(a, pf_digits(F, full, n, rest));
    s = (p % 2 == 1) ? F.add(s, term) : F.sub(s, term);
  }
  return s;
}

Idx pf_of_upper(const FiniteRing& F, const Digits& upper, std::size_t n) {
  Digits full(n * n, F.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      full[i * n + j] = upper[tri(n, i, j)];
      full[j * n + i] = F.neg(upper[tri(n, i, j)]);
    }
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  return pf_digits(F, full, n, idx);
}

std::vector<StandardForm> all_forms(std::size_t n) {
  std::vector<StandardForm> out;
  for (std::size_t r = 0; r <= n; ++r) {
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) out.push_back({r, n, s1, s2});
    }
  }
  return out;
}

struct Dsu {
  std::vector<std::uint32_t> up;
  explicit Dsu(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  // The smaller root survives.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    up[b] = a;
  }
};

constexpr std::uint32_t kRoot = 0xFFFFFFFFu;

}  // namespace

std::vector<UmRow> enumerate_um(const RingPtr& ring, std::size_t n, const std::optional<Ideal>& ideal) {
  auto F = FiniteRing::of(ring);
  std::vector<Digits> cand(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!ideal) {
      for (std::size_t x = 0; x < F->size(); ++x) cand[k].push_back(static_cast<Idx>(x));
    } else {
      FiniteIdeal I(*F, *ideal);
      cand[k] = I.members();
      if (k == 0) {
        for (auto& x : cand[k]) x = F->add(F->one(), x);
        std::sort(cand[k].begin(), cand[k].end());
      }
    }
  }
  long double total = 1;
  for (const auto& c : cand) total *= static_cast<long double>(c.size());
  if (total > static_cast<long double>(kDefaultOrbitBound)) {
    fail(ErrorCode::TooLarge, "too many candidate rows to enumerate");
  }
  std::vector<UmRow> out;
  if (n == 0) return out;
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    UmRow row{ring, {}};
    for (std::size_t k = 0; k < n; ++k) row.entries.push_back(F->value(cand[k][pos[k]]));
    if (is_unimodular(row)) out.push_back(std::move(row));
    std::size_t j = n;
    while (j > 0 && ++pos[j - 1] == cand[j - 1].size()) pos[--j] = 0;
    if (j == 0) break;
  }
  return out;
}

Matrix GeneratorSet::matrix(std::size_t k) const {
  const auto& g = gens.at(k);
  auto F = FiniteRing::of(ring);
  Matrix m = Matrix::identity(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = ring->add(m.at(i, j), F->value(F->mul(g.u[i], g.w[j])));
    }
  }
  return m;
}

nlohmann::json GeneratorSet::descriptor() const {
  return {{"n", n},           {"relative", relative}, {"ideal", ideal},
          {"conj_depth", depth}, {"count", gens.size()}, {"saturated", saturated}};
}

GeneratorSet elementary_generators(const RingPtr& ring, std::size_t n, const std::optional<Ideal>& ideal,
                                   std::size_t depth) {
  auto F = FiniteRing::of(ring);
  GeneratorSet out;
  out.ring = ring;
  out.n = n;
  out.depth = depth;
  out.relative = ideal.has_value();
  if (ideal) out.ideal = ideal->generator_strings();

  auto unit = [&](std::size_t k) {
    Digits v(n, F->zero());
    v[k] = F->one();
    return v;
  };
  auto scaled_unit = [&](std::size_t k, Idx a) {
    Digits v(n, F->zero());
    v[k] = a;
    return v;
  };
  auto elementary = [&](const Digits& coeffs) {
    std::vector<Transvection> list;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (Idx a : coeffs) {
          if (a == F->zero()) continue;
          list.push_back({unit(i), scaled_unit(j, a), Token{Elem{i + 1, j + 1, F->value(a)}}});
        }
      }
    }
    return list;
  };

  Digits every(F->size());
  std::iota(every.begin(), every.end(), Idx{0});
  std::vector<Transvection> absolute = elementary(every);
  if (!ideal || ideal->is_unit_ideal()) {
    out.gens = std::move(absolute);
    out.saturated = true;
    return out;
  }

  FiniteIdeal I(*F, *ideal);
  std::vector<Transvection> layer = elementary(I.members());
  std::set<Digits> seen;
  for (const auto& g : layer) seen.insert(outer_key(*F, g.u, g.w));
  out.gens = layer;

  auto conjugate = [&](const Transvection& g, const Transvection& h, Transvection& into) {
    const auto& he = std::get<Elem>(h.token.node);
    std::size_t k = he.i - 1, l = he.j - 1;
    Idx b = h.w[l];
    into.u = g.u;
    into.w = g.w;
    into.u[k] = F->add(into.u[k], F->mul(b, g.u[l]));
    into.w[l] = F->sub(into.w[l], F->mul(b, g.w[k]));
  };

  for (std::size_t d = 1; d <= depth && !layer.empty(); ++d) {
    std::vector<Transvection> next;
    for (const auto& g : layer) {
      for (const auto& h : absolute) {
        Transvection t;
        conjugate(g, h, t);
        Digits key = outer_key(*F, t.u, t.w);
        if (is_zero_key(*F, key) || !seen.insert(key).second) continue;
        t.token = layer_token(std::get<Elem>(h.token.node), g.token);
        next.push_back(std::move(t));
      }
    }
    out.gens.insert(out.gens.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  bool closed = true;
  for (const auto& g : layer) {
    for (const auto& h : absolute) {
      Transvection t;
      conjugate(g, h, t);
      Digits key = outer_key(*F, t.u, t.w);
      if (!is_zero_key(*F, key) && !seen.count(key)) {
        closed = false;
        break;
      }
    }
    if (!closed) break;
  }
  out.saturated = closed;
  return out;
}

ObjectCodec::ObjectCodec(std::shared_ptr<const FiniteRing> ring, Action action, std::size_t n)
    : ring_(std::move(ring)), action_(action), n_(n) {
  digits_ = action == Action::Row ? n : n * (n - (n > 0 ? 1 : 0)) / 2;
  Code span = 1;
  for (std::size_t k = 0; k < digits_; ++k) {
    if (span > ~Code{0} / ring_->size()) fail(ErrorCode::TooLarge, "object space does not fit in 64 bits");
    span *= ring_->size();
  }
}

Code ObjectCodec::encode(const std::vector<Idx>& d) const {
  if (d.size() != digits_) fail(ErrorCode::SizeMismatch, "wrong number of digits");
  Code c = 0;
  for (Idx x : d) c = c * ring_->size() + x;
  return c;
}

std::vector<Idx> ObjectCodec::decode(Code c) const {
  std::vector<Idx> d(digits_);
  for (std::size_t k = digits_; k-- > 0;) {
    d[k] = static_cast<Idx>(c % ring_->size());
    c /= ring_->size();
  }
  return d;
}

Code ObjectCodec::from_row(const UmRow& v) const {
  if (action_ != Action::Row || v.size() != n_) fail(ErrorCode::SizeMismatch, "row does not match the codec");
  Digits d;
  for (const auto& e : v.entries) d.push_back(ring_->index(e));
  return encode(d);
}

UmRow ObjectCodec::to_row(Code c) const {
  UmRow row{ring_->ring(), {}};
  for (Idx x : decode(c)) row.entries.push_back(ring_->value(x));
  return row;
}

Code ObjectCodec::from_matrix(const Matrix& m) const {
  if (action_ != Action::Congruence || m.rows() != n_ || m.cols() != n_) {
    fail(ErrorCode::SizeMismatch, "matrix does not match the codec");
  }
  if (!m.is_alternating()) fail(ErrorCode::NotAlternating, "codec stores alternating matrices");
  Digits d;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) d.push_back(ring_->index(m.at(i, j)));
  }
  return encode(d);
}

Matrix ObjectCodec::to_matrix(Code c) const {
  const RingPtr& R = ring_->ring();
  Matrix m(R, n_, n_);
  Digits d = decode(c);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      m.at(i, j) = ring_->value(d[tri(n_, i, j)]);
      m.at(j, i) = R->neg(m.at(i, j));
    }
  }
  return m;
}

Code ObjectCodec::apply(Code c, const Transvection& g) const {
  Stepper s(*this);
  s.load(c);
  return s.apply(sparse_of(*ring_, g));
}

std::optional<std::size_t> OrbitPartition::index_of(Code c) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), c);
  if (it == objects.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - objects.begin());
}

std::optional<std::uint32_t> OrbitPartition::orbit_of(Code c) const {
  auto k = index_of(c);
  if (!k) return std::nullopt;
  return orbit[*k];
}

std::vector<Code> OrbitPartition::members(std::uint32_t id) const {
  std::vector<Code> out;
  for (std::size_t k = 0; k < objects.size(); ++k) {
    if (orbit[k] == id) out.push_back(objects[k]);
  }
  return out;
}

GroupWord OrbitPartition::word_to(Code c) const {
  auto k = index_of(c);
  if (!k) fail(ErrorCode::VerificationFailed, "object outside the partition");
  std::vector<Token> path;
  for (std::size_t x = *k; parent[x] != kRoot; x = parent[x]) path.push_back(tokens[via[x]]);
  std::reverse(path.begin(), path.end());
  return GroupWord(ring, n, std::move(path));
}

OrbitPartition orbit_bfs(const ObjectCodec& codec, std::vector<Code> objects, const GeneratorSet& gens,
                         std::size_t bound) {
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  if (gens.n != codec.n()) fail(ErrorCode::SizeMismatch, "generators act on a different size");

  OrbitPartition P;
  P.ring = codec.ring().ring();
  P.action = codec.action();
  P.n = codec.n();
  P.generators = gens.descriptor();
  P.generators_saturated = gens.saturated;
  P.bound = bound;
  P.objects = std::move(objects);
  const std::size_t N = P.objects.size();
  constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
  P.orbit.assign(N, kUnset);
  P.parent.assign(N, kRoot);
  P.via.assign(N, 0);
  for (const auto& g : gens.gens) P.tokens.push_back(g.token);

  std::vector<Sparse> sparse;
  for (const auto& g : gens.gens) sparse.push_back(sparse_of(codec.ring(), g));
  Stepper step(codec);
  P.saturated = true;

  for (std::size_t start = 0; start < N; ++start) {
    if (P.orbit[start] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(P.representatives.size());
    P.representatives.push_back(P.objects[start]);
    P.orbit[start] = id;
    std::size_t size = 1;
    bool closed = true;
    std::deque<std::size_t> queue{start};
    while (!queue.empty() && closed) {
      std::size_t x = queue.front();
      queue.pop_front();
      step.load(P.objects[x]);
      for (std::size_t g = 0; g < sparse.size(); ++g) {
        Code y = step.apply(sparse[g]);
        auto it = std::lower_bound(P.objects.begin(), P.objects.end(), y);
        if (it == P.objects.end() || *it != y) {
          fail(ErrorCode::VerificationFailed, "a generator moved an object out of the object set");
        }
        auto k = static_cast<std::size_t>(it - P.objects.begin());
        if (P.orbit[k] == id) continue;
        if (P.orbit[k] != kUnset) {
          // Only possible when an earlier orbit was cut off by the bound.
          closed = false;
          continue;
        }
        P.orbit[k] = id;
        P.parent[k] = static_cast<std::uint32_t>(x);
        P.via[k] = static_cast<std::uint32_t>(g);
        queue.push_back(k);
        if (++size >= bound) {
          closed = false;
          break;
        }
      }
    }
    P.sizes.push_back(size);
    P.orbit_saturated.push_back(closed);
    if (!closed) P.saturated = false;
  }
  return P;
}

OrbitPartition um_orbits(const RingPtr& ring, std::size_t n, const std::optional<Ideal>& ideal, std::size_t depth,
                         std::size_t bound) {
  ObjectCodec codec(FiniteRing::of(ring), Action::Row, n);
  std::vector<Code> objects;
  for (const auto& row : enumerate_um(ring, n, ideal)) objects.push_back(codec.from_row(row));
  return orbit_bfs(codec, std::move(objects), elementary_generators(ring, n, ideal, depth), bound);
}

std::vector<Code> witt_objects(const ObjectCodec& codec, const Ideal& ideal) {
  if (codec.action() != Action::Congruence || codec.n() % 2 != 0) {
    fail(ErrorCode::OddSize, "Witt objects are alternating matrices of even size");
  }
  const FiniteRing& F = codec.ring();
  const std::size_t n = codec.n();
  FiniteIdeal I(F, ideal);
  const auto& members = I.members();
  const std::size_t digits = codec.digits();
  long double per_form = 1;
  for (std::size_t k = 0; k < digits; ++k) per_form *= static_cast<long double>(members.size());
  if (per_form > static_cast<long double>(kDefaultOrbitBound) * 4) {
    fail(ErrorCode::TooLarge, "too many candidate matrices to enumerate");
  }
  std::vector<Digits> bases;
  if (I.is_unit_ideal()) {
    bases.emplace_back(digits, F.zero());
  } else {
    for (const auto& f : all_forms(n / 2)) {
      Matrix c = chi(F.ring(), f);
      Digits d;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) d.push_back(F.index(c.at(i, j)));
      }
      if (std::find(bases.begin(), bases.end(), d) == bases.end()) bases.push_back(std::move(d));
    }
  }
  std::vector<Code> out;
  for (const auto& base : bases) {
    std::vector<std::size_t> pos(digits, 0);
    Digits d(digits);
    while (true) {
      for (std::size_t k = 0; k < digits; ++k) d[k] = F.add(base[k], members[pos[k]]);
      if (pf_of_upper(F, d, n) == F.one()) out.push_back(codec.encode(d));
      std::size_t j = digits;
      while (j > 0 && ++pos[j - 1] == members.size()) pos[--j] = 0;
      if (j == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrbitPartition alt_orbits(const RingPtr& ring, std::size_t n, const Ideal& ideal, std::size_t depth,
                          std::size_t bound) {
  ObjectCodec codec(FiniteRing::of(ring), Action::Congruence, 2 * n);
  return orbit_bfs(codec, witt_objects(codec, ideal), elementary_generators(ring, 2 * n, ideal, depth), bound);
}

std::optional<std::uint32_t> WittFamily::class_of_matrix(const Matrix& m) const {
  ObjectCodec codec(FiniteRing::of(level0.ring), Action::Congruence, 2 * n);
  if (m.rows() != 2 * n || m.cols() != 2 * n || !m.is_alternating()) return std::nullopt;
  auto o = level0.orbit_of(codec.from_matrix(m));
  if (!o) return std::nullopt;
  return class_of[*o];
}

Matrix WittFamily::representative(std::uint32_t orbit) const {
  ObjectCodec codec(FiniteRing::of(level0.ring), Action::Congruence, 2 * n);
  return codec.to_matrix(level0.representatives.at(orbit));
}

std::optional<EquivalenceCertificate> WittFamily::certificate(std::uint32_t a, std::uint32_t b) const {
  if (class_of.at(a) != class_of.at(b)) return std::nullopt;
  const RingPtr& R = level0.ring;
  auto symbol = [&](std::uint32_t o) { return make_symbol(representative(o), ideal); };
  // Certificate for rep_orbit ~ rep_into from one merge.
  auto edge = [&](const WittMerge& m) {
    std::size_t t = m.t > n ? m.t - n : 0;
    return EquivalenceCertificate{t, m.word.resized(2 * (2 * n + t))};
  };
  // Breadth-first search over merges, from a to b.
  std::vector<int> seen(class_of.size(), -1);
  std::vector<std::optional<std::pair<std::uint32_t, EquivalenceCertificate>>> via(class_of.size());
  std::deque<std::uint32_t> queue{a};
  seen[a] = 0;
  while (!queue.empty() && seen[b] < 0) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (const auto& m : merges) {
      if (m.orbit != x && m.into != x) continue;
      std::uint32_t y = m.orbit == x ? m.into : m.orbit;
      if (seen[y] >= 0) continue;
      seen[y] = 1;
      via[y].emplace(x, m.orbit == x ? edge(m) : reverse_certificate(edge(m)));
      queue.push_back(y);
    }
  }
  if (seen[b] < 0) return std::nullopt;
  std::vector<std::uint32_t> chain{b};
  while (chain.back() != a) chain.push_back(via[chain.back()]->first);
  std::reverse(chain.begin(), chain.end());
  WittSymbol alpha = symbol(a);
  EquivalenceCertificate cert{0, GroupWord(R, 4 * n)};
  for (std::size_t k = 1; k < chain.size(); ++k) {
    WittSymbol beta = symbol(chain[k - 1]);
    WittSymbol gamma = symbol(chain[k]);
    cert = compose_certificates(alpha, beta, gamma, cert, via[chain[k]]->second);
  }
  if (!verify_equivalence(alpha, symbol(b), cert)) {
    fail(ErrorCode::VerificationFailed, "merge certificate does not verify");
  }
  return cert;
}

std::optional<EquivalenceCertificate> WittFamily::certify(const Matrix& x, const Matrix& y) const {
  ObjectCodec codec(FiniteRing::of(level0.ring), Action::Congruence, 2 * n);
  if (!x.is_alternating() || !y.is_alternating()) return std::nullopt;
  Code cx = codec.from_matrix(x), cy = codec.from_matrix(y);
  auto ox = level0.orbit_of(cx), oy = level0.orbit_of(cy);
  if (!ox || !oy) return std::nullopt;
  auto mid = certificate(*ox, *oy);
  if (!mid) return std::nullopt;
  WittSymbol sx = make_symbol(x, ideal), sy = make_symbol(y, ideal);
  WittSymbol rx = make_symbol(representative(*ox), ideal), ry = make_symbol(representative(*oy), ideal);
  EquivalenceCertificate to_rx{0, level0.word_to(cx).resized(4 * n)};
  EquivalenceCertificate to_ry{0, level0.word_to(cy).resized(4 * n)};
  EquivalenceCertificate cert = compose_certificates(sx, rx, ry, to_rx, *mid);
  cert = compose_certificates(sx, ry, sy, cert, reverse_certificate(to_ry));
  if (!verify_equivalence(sx, sy, cert)) fail(ErrorCode::VerificationFailed, "class certificate does not verify");
  return cert;
}

WittFamily witt_classes_bounded(const RingPtr& ring, const Ideal& ideal, std::size_t n, std::size_t stabilization,
                                std::size_t depth, std::size_t bound) {
  auto F = FiniteRing::of(ring);
  WittFamily W{ideal, n, stabilization, depth, alt_orbits(ring, n, ideal, depth, bound), {}, {}, {}, {}, false};
  const OrbitPartition& L0 = W.level0;
  const std::size_t orbits = L0.orbit_count();
  Dsu dsu(orbits);
  std::size_t classes = orbits;
  W.levels.push_back({0, classes, L0.objects.size(), 0, L0.generators_saturated, L0.saturated, false});
  W.levels.back().generators = L0.generators.value("count", std::size_t{0});
  FiniteIdeal I(*F, ideal);
  ObjectCodec codec0(F, Action::Congruence, 2 * n);

  for (std::size_t t = 1; t <= stabilization; ++t) {
    WittLevel level{t, classes, 0, 0, true, true, false};
    if (classes <= 1) {
      level.skipped = true;
      W.levels.push_back(level);
      continue;
    }
    const std::size_t size = 2 * (n + t);
    ObjectCodec codec(F, Action::Congruence, size);
    GeneratorSet gens = elementary_generators(ring, size, ideal, depth);
    level.generators = gens.gens.size();
    level.generators_saturated = gens.saturated;
    std::vector<Sparse> sparse;
    for (const auto& g : gens.gens) sparse.push_back(sparse_of(*F, g));
    Matrix pad = chi(ring, t);

    struct Node {
      std::uint32_t seed;
      std::uint32_t parent;
      std::uint32_t via;
    };
    std::vector<Node> nodes;
    std::vector<Code> codes;
    std::unordered_map<Code, std::uint32_t> where;
    Stepper step(codec);

    auto word_from_root = [&](std::uint32_t k) {
      std::vector<Token> path;
      for (std::uint32_t x = k; nodes[x].parent != kRoot; x = nodes[x].parent) path.push_back(gens.gens[nodes[x].via].token);
      std::reverse(path.begin(), path.end());
      return GroupWord(ring, size, std::move(path));
    };

    for (std::uint32_t k = 0; k < orbits; ++k) {
      Code seed = codec.from_matrix(orth_sum(codec0.to_matrix(L0.representatives[k]), pad));
      auto found = where.find(seed);
      if (found != where.end()) {
        std::uint32_t owner = nodes[found->second].seed;
        W.merges.push_back({t, k, owner, word_from_root(found->second)});
        dsu.unite(k, owner);
        continue;
      }
      Digits seed_digits = codec.decode(seed);
      auto root = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back({k, kRoot, 0});
      codes.push_back(seed);
      where.emplace(seed, root);
      std::size_t count = 1;
      bool closed = true;
      for (std::size_t head = root; head < nodes.size() && closed; ++head) {
        step.load(codes[head]);
        for (std::size_t g = 0; g < sparse.size(); ++g) {
          Code y = step.apply(sparse[g]);
          if (where.count(y)) continue;
          Digits d = codec.decode(y);
          for (std::size_t p = 0; p < d.size(); ++p) {
            if (!I.contains(F->sub(d[p], seed_digits[p]))) {
              fail(ErrorCode::VerificationFailed, "congruence moved a matrix off its level");
            }
          }
          auto id = static_cast<std::uint32_t>(nodes.size());
          nodes.push_back({k, static_cast<std::uint32_t>(head), static_cast<std::uint32_t>(g)});
          codes.push_back(y);
          where.emplace(y, id);
          if (++count >= bound) {
            closed = false;
            break;
          }
        }
      }
      level.explored += count;
      if (!closed) level.saturated = false;
    }
    classes = 0;
    for (std::uint32_t k = 0; k < orbits; ++k) classes += dsu.find(k) == k;
    level.classes = classes;
    W.levels.push_back(level);
  }

  W.class_of.assign(orbits, 0);
  std::vector<std::int64_t> id_of_root(orbits, -1);
  for (std::uint32_t k = 0; k < orbits; ++k) {
    std::uint32_t r = dsu.find(k);
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<std::int64_t>(W.class_rep.size());
      W.class_rep.push_back(k);
    }
    W.class_of[k] = static_cast<std::uint32_t>(id_of_root[r]);
  }
  W.saturated = std::all_of(W.levels.begin(), W.levels.end(),
                            [](const WittLevel& l) { return l.saturated && l.generators_saturated; });
  return W;
}

}  // namespace relwitt
