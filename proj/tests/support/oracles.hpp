#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "relwitt/group_word.hpp"
#include "relwitt/ideal.hpp"
#include "relwitt/matrix.hpp"
#include "relwitt/ring.hpp"
#include "relwitt/row.hpp"

// Slow reference computations the tests compare the library against. None of
// them call the code they check.
namespace oracle {

using namespace relwitt;

struct RowLess {
  bool operator()(const std::vector<Value>& a, const std::vector<Value>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ValueLess{});
  }
};
using RowSet = std::set<std::vector<Value>, RowLess>;

inline RingPtr ring(std::string_view shorthand) { return make_ring(parse_ring_spec(shorthand)); }

inline Value val(const RingPtr& r, long long n) { return r->from_integer(n); }

// Sum over perfect matchings with the crossing-number sign.
inline Value pf_matching(const Matrix& a) {
  const Ring& r = *a.ring();
  std::size_t n = a.rows();
  if (n % 2 != 0) return r.zero();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(n, false);
  Value total = r.zero();
  std::function<void()> rec = [&]() {
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      std::size_t crossings = 0;
      for (const auto& [a1, b1] : pairs) {
        for (const auto& [a2, b2] : pairs) {
          if (a1 < a2 && a2 < b1 && b1 < b2) ++crossings;
        }
      }
      Value term = r.one();
      for (const auto& [p, q] : pairs) term = r.mul(term, a.at(p, q));
      total = crossings % 2 == 0 ? r.add(total, term) : r.sub(total, term);
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(i, j);
      rec();
      pairs.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec();
  return total;
}

// Leibniz formula.
inline Value det_leibniz(const Matrix& a) {
  const Ring& r = *a.ring();
  std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Value total = r.zero();
  do {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j] ? 1 : 0;
    }
    Value term = r.one();
    for (std::size_t i = 0; i < n; ++i) term = r.mul(term, a.at(i, p[i]));
    total = inv % 2 == 0 ? r.add(total, term) : r.sub(total, term);
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Every combination sum r_k g_k over a finite ring.
inline std::set<Value, ValueLess> closure(const RingPtr& r, const std::vector<Value>& gens) {
  std::vector<Value> elems = r->elements();
  std::set<Value, ValueLess> out{r->zero()};
  for (const auto& g : gens) {
    std::set<Value, ValueLess> next;
    for (const auto& x : out) {
      for (const auto& c : elems) next.insert(r->add(x, r->mul(c, g)));
    }
    out = std::move(next);
  }
  return out;
}

inline Matrix random_alternating(const RingPtr& r, std::size_t n, std::mt19937& rng) {
  std::vector<Value> elems = r->elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  Matrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m.at(i, j) = elems[pick(rng)];
      m.at(j, i) = r->neg(m.at(i, j));
    }
  }
  return m;
}

inline Matrix random_matrix(const RingPtr& r, std::size_t n, std::mt19937& rng) {
  std::vector<Value> elems = r->elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  Matrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = elems[pick(rng)];
  }
  return m;
}

// Coefficients drawn from `pool` (all elements when empty).
inline GroupWord random_word(const RingPtr& r, std::size_t n, std::size_t length, std::mt19937& rng,
                             std::vector<Value> pool = {}) {
  if (pool.empty()) pool = r->elements();
  std::uniform_int_distribution<std::size_t> idx(1, n);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  GroupWord w(r, n);
  for (std::size_t k = 0; k < length; ++k) {
    std::size_t i = idx(rng), j = idx(rng);
    while (j == i) j = idx(rng);
    w.push(Elem{i, j, pool[pick(rng)]});
  }
  return w;
}

inline std::vector<Value> row_times(const Ring& r, const std::vector<Value>& v, const Matrix& g) {
  std::vector<Value> out(g.cols(), r.zero());
  for (std::size_t j = 0; j < g.cols(); ++j) {
    for (std::size_t i = 0; i < v.size(); ++i) out[j] = r.add(out[j], r.mul(v[i], g.at(i, j)));
  }
  return out;
}

// Closure of one row under right multiplication by the given matrices.
inline RowSet row_orbit(const Ring& r, const std::vector<Value>& start, const std::vector<Matrix>& gens) {
  RowSet seen{start};
  std::vector<std::vector<Value>> todo{start};
  while (!todo.empty()) {
    auto v = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      auto w = row_times(r, v, g);
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return seen;
}

inline std::vector<std::vector<Value>> all_rows(const RingPtr& r, std::size_t n) {
  std::vector<Value> elems = r->elements();
  std::vector<std::vector<Value>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<Value>> next;
    for (const auto& v : out) {
      for (const auto& e : elems) {
        auto w = v;
        w.push_back(e);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Unimodular by exhaustive search for a completion.
inline bool has_completion(const RingPtr& r, const std::vector<Value>& v) {
  for (const auto& b : all_rows(r, v.size())) {
    Value s = r->zero();
    for (std::size_t k = 0; k < v.size(); ++k) s = r->add(s, r->mul(v[k], b[k]));
    if (s == r->one()) return true;
  }
  return false;
}

}  // namespace oracle
