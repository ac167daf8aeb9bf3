#pragma once

#include <optional>
#include <vector>

#include "relwitt/group_word.hpp"
#include "relwitt/matrix.hpp"
#include "relwitt/orbit.hpp"
#include "relwitt/row.hpp"
#include "relwitt/witt.hpp"

namespace relwitt {

/// b with v . b = 1. Finite rings: dynamic programming over reachable sums,
/// first witness in enumeration order. Z: iterated extended Euclid. Other
/// rings succeed only when some entry is a unit; rings that are not fields
/// then throw UndecidableCompletion.
std::optional<UmRow> complete(const UmRow& v);
bool is_unimodular(const UmRow& v);

/// a = e_1 mod I with a . v = 1 for a relative row v. Finite rings search the
/// coset e_1 + I^n; elsewhere a = e_1 + (1 - v_1) c for an absolute
/// completion c. Throws NotRelative.
std::optional<UmRow> complete_relative(const UmRow& v, const Ideal& ideal);

/// The 4x4 matrix with first row (0, -b1, -b2, -b3) and the cross-product
/// pattern of a below. Throws NotCompleted unless a . b = 1.
Matrix theta(const UmRow& a, const UmRow& b);
/// The same matrix without the completion check.
Matrix theta_raw(const UmRow& a, const UmRow& b);

/// e_12(d1) e_13(d2) e_14(d3) with theta(c, b) = eps^T theta(a, b) eps,
/// d1 = c3 a2 - c2 a3, d2 = c1 a3 - c3 a1, d3 = c2 a1 - c1 a2.
GroupWord theta_independence_cert(const UmRow& a, const UmRow& c, const UmRow& b);

/// theta(a, v) for the relative completion a. Throws NoRelativeCompletionFound.
WittSymbol vaserstein_symbol(const UmRow& v, const Ideal& ideal);

/// (a0 (b0 + p0) - 1, (b0 + p0) a1, a2, ..., ad) with a taken from u and b from
/// v once both share a tail. Over finite rings the tails are aligned inside
/// the orbits of `orbits`: the first pair in code order with equal tails.
/// p0 is the first element with a0 p0 = 1 mod (a1, ..., ad) and, for a
/// relative partition, p0 = 1 mod I. Throws TailAlignmentFailed or NoP0Found.
UmRow vdk_product(const UmRow& u, const UmRow& v, const OrbitPartition& orbits,
                  const std::optional<Ideal>& ideal = std::nullopt);
/// Rows that already share a tail; no alignment.
UmRow vdk_product(const UmRow& u, const UmRow& v, const std::optional<Ideal>& ideal = std::nullopt);

/// vdk_product((b, tail), (a, tail)) lies in the orbit of (ab, tail).
bool nice_mult_check(const Value& a, const Value& b, const std::vector<Value>& tail, const OrbitPartition& orbits,
                     const std::optional<Ideal>& ideal = std::nullopt);

/// (1 + i1, i2, ..., in) -> ((1, i1), (0, i2), ..., (0, in)) over R (+) I, or
/// over Z (+) I when `integer_base` is set. Throws NotRelative.
UmRow tilde_row_lift(const UmRow& v, const Ideal& ideal, bool integer_base = false);

/// Entrywise (r, i) -> r 1 + i from an excision ring into its base.
UmRow excision_map_f(const UmRow& v);

struct StableRangeStep {
  std::vector<Value> c;
};
struct StableRangeResult {
  UmRow row;
  std::vector<StableRangeStep> steps;
};

/// Shortens v to length n one coordinate at a time, replacing
/// (a1, ..., a(k+1)) by (a1 + c1 a(k+1), ..., ak + ck a(k+1)) for the
/// lexicographically first c in I^k that keeps the row unimodular.
std::optional<StableRangeResult> stable_range_reduce(const UmRow& v, const Ideal& ideal, std::size_t n);

}  // namespace relwitt
