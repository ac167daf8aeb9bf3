#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "relwitt/finite_ring.hpp"
#include "relwitt/group_word.hpp"
#include "relwitt/row.hpp"
#include "relwitt/witt.hpp"

// Orbit computations over small finite rings: unimodular rows under
// right multiplication and alternating matrices under congruence.
namespace relwitt {

using Code = std::uint64_t;
using Idx = FiniteRing::Idx;

inline constexpr std::size_t kDefaultOrbitBound = std::size_t{1} << 22;

/// Rows of length n whose entries generate the unit ideal, in lexicographic
/// order; with an ideal, only rows of the coset e_1 + I^n. Throws
/// InfiniteRing, or TooLarge above kDefaultOrbitBound candidates.
std::vector<UmRow> enumerate_um(const RingPtr& ring, std::size_t n, const std::optional<Ideal>& ideal = std::nullopt);

/// identity + u w^T with w^T u = 0.
struct Transvection {
  std::vector<Idx> u;
  std::vector<Idx> w;
  Token token;
};

struct GeneratorSet {
  RingPtr ring;
  std::size_t n = 0;
  bool relative = false;
  std::vector<std::string> ideal;
  std::size_t depth = 0;
  /// One more conjugation layer would add nothing: the set is closed under
  /// conjugation by E_n(R), so it generates E_n(R, I) exactly.
  bool saturated = false;
  std::vector<Transvection> gens;

  Matrix matrix(std::size_t k) const;
  nlohmann::json descriptor() const;
};

/// Absolute: e_ij(a) for i != j and nonzero a. Relative: g e_ij(a) g^-1 for
/// a in I and g a product of at most `depth` absolute generators, deduplicated
/// by matrix. The unit ideal gives the absolute set.
GeneratorSet elementary_generators(const RingPtr& ring, std::size_t n, const std::optional<Ideal>& ideal,
                                   std::size_t depth);

enum class Action {
  Row,          // v -> v g
  Congruence,   // M -> g^T M g, M alternating
};

/// Packs rows, or the strict upper triangle of alternating matrices, into a
/// single integer with the first entry most significant. Code order is the
/// lexicographic order on entries.
class ObjectCodec {
 public:
  /// Throws TooLarge when the object space does not fit in 64 bits.
  ObjectCodec(std::shared_ptr<const FiniteRing> ring, Action action, std::size_t n);

  const FiniteRing& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const FiniteRing>& ring_ptr() const noexcept { return ring_; }
  Action action() const noexcept { return action_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t digits() const noexcept { return digits_; }

  Code encode(const std::vector<Idx>& digits) const;
  std::vector<Idx> decode(Code c) const;

  Code from_row(const UmRow& v) const;
  UmRow to_row(Code c) const;
  Code from_matrix(const Matrix& m) const;
  Matrix to_matrix(Code c) const;

  Code apply(Code c, const Transvection& g) const;

 private:
  std::shared_ptr<const FiniteRing> ring_;
  Action action_;
  std::size_t n_;
  std::size_t digits_;
};

struct OrbitPartition {
  RingPtr ring;
  Action action = Action::Row;
  std::size_t n = 0;
  nlohmann::json generators;
  bool generators_saturated = false;
  std::size_t bound = kDefaultOrbitBound;

  std::vector<Code> objects;              // ascending
  std::vector<std::uint32_t> orbit;       // orbit id per object
  std::vector<Code> representatives;      // per orbit, its minimum
  std::vector<std::size_t> sizes;
  std::vector<bool> orbit_saturated;      // false when the bound cut the orbit
  bool saturated = false;                 // every orbit closed

  // BFS tree: object = parent * generator (row) or generator^T parent generator.
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> via;
  std::vector<Token> tokens;

  std::size_t orbit_count() const noexcept { return representatives.size(); }
  std::optional<std::size_t> index_of(Code c) const;
  std::optional<std::uint32_t> orbit_of(Code c) const;
  /// Members of one orbit in ascending order.
  std::vector<Code> members(std::uint32_t id) const;
  /// The word eps of size n with object = representative * eps for rows, or
  /// eps^T representative eps for matrices.
  GroupWord word_to(Code c) const;
};

/// BFS from each unvisited object in ascending order. Every edge must stay
/// inside `objects`; leaving it throws VerificationFailed. An orbit reaching
/// `bound` elements stops growing and is flagged unsaturated.
OrbitPartition orbit_bfs(const ObjectCodec& codec, std::vector<Code> objects, const GeneratorSet& gens,
                         std::size_t bound = kDefaultOrbitBound);

/// Um_n(R, I) under E_n(R, I) at conjugation depth c.
OrbitPartition um_orbits(const RingPtr& ring, std::size_t n, const std::optional<Ideal>& ideal, std::size_t depth,
                         std::size_t bound = kDefaultOrbitBound);

/// Alternating matrices of size 2n with Pfaffian 1 congruent mod I to some
/// standard form, in code order.
std::vector<Code> witt_objects(const ObjectCodec& codec, const Ideal& ideal);

/// Those matrices under congruence by E_2n(R, I) at conjugation depth c.
OrbitPartition alt_orbits(const RingPtr& ring, std::size_t n, const Ideal& ideal, std::size_t depth,
                          std::size_t bound = kDefaultOrbitBound);

/// At padding level t the orbit of rep (+) chi_t under E_2(n+t)(R, I) reached
/// the padded representative of `orbit`; `into` is the seed whose search found
/// it. word^T (rep_into (+) chi_t) word = rep_orbit (+) chi_t.
struct WittMerge {
  std::size_t t = 0;
  std::uint32_t orbit = 0;
  std::uint32_t into = 0;
  GroupWord word;
};

struct WittLevel {
  std::size_t t = 0;
  std::size_t classes = 0;
  std::size_t explored = 0;
  std::size_t generators = 0;
  bool generators_saturated = true;
  bool saturated = true;
  /// Not searched because a single class remained.
  bool skipped = false;
};

struct WittFamily {
  Ideal ideal;
  std::size_t n = 0;
  std::size_t stabilization = 0;
  std::size_t depth = 0;
  OrbitPartition level0;
  std::vector<WittLevel> levels;
  std::vector<WittMerge> merges;
  /// Class per level-0 orbit after all levels; classes are numbered by their
  /// smallest level-0 orbit.
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> class_rep;  // smallest level-0 orbit per class
  bool saturated = false;

  std::size_t class_count() const noexcept { return class_rep.size(); }
  /// Class of a size-2n matrix, if it belongs to the object set.
  std::optional<std::uint32_t> class_of_matrix(const Matrix& m) const;
  /// Verified certificate that orbit a's representative is equivalent to
  /// orbit b's when they lie in one class; nullopt otherwise.
  std::optional<EquivalenceCertificate> certificate(std::uint32_t a, std::uint32_t b) const;
  /// Verified certificate for two matrices of the object set in one class.
  std::optional<EquivalenceCertificate> certify(const Matrix& x, const Matrix& y) const;
  Matrix representative(std::uint32_t orbit) const;
};

/// Level 0 is the congruence partition of witt_objects at size 2n. Level t
/// searches from the padded representatives rep (+) chi_t and merges orbits
/// that meet. Levels after the partition collapses to one class are skipped.
WittFamily witt_classes_bounded(const RingPtr& ring, const Ideal& ideal, std::size_t n, std::size_t stabilization,
                                std::size_t depth, std::size_t bound = kDefaultOrbitBound);

}  // namespace relwitt
