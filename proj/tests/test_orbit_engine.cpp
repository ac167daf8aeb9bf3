#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "relwitt/orbit.hpp"
#include "relwitt/unimodular.hpp"

using namespace relwitt;

namespace {

std::vector<Matrix> generator_matrices(const GeneratorSet& g) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < g.gens.size(); ++k) out.push_back(g.matrix(k));
  return out;
}

// Partition of `objects` into closures under the action, by plain set search.
std::map<std::vector<Value>, std::size_t, oracle::RowLess> naive_row_partition(const Ring& r, const std::vector<UmRow>& objects,
                                                              const std::vector<Matrix>& gens) {
  std::map<std::vector<Value>, std::size_t, oracle::RowLess> label;
  std::size_t next = 0;
  for (const auto& v : objects) {
    if (label.count(v.entries)) continue;
    for (const auto& w : oracle::row_orbit(r, v.entries, gens)) label[w] = next;
    ++next;
  }
  return label;
}

}  // namespace

TEST(EnumerateUm, Counts) {
  EXPECT_EQ(enumerate_um(oracle::ring("zmod:2"), 3).size(), 7u);
  for (auto [text, n] : {std::pair{"zmod:4", 2}, std::pair{"zmod:6", 2}, std::pair{"zmod:4", 3}}) {
    auto r = oracle::ring(text);
    std::size_t expect = 0;
    for (const auto& v : oracle::all_rows(r, n)) expect += oracle::has_completion(r, v) ? 1 : 0;
    auto rows = enumerate_um(r, n);
    EXPECT_EQ(rows.size(), expect) << text;
    EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(),
                               [](const UmRow& a, const UmRow& b) { return oracle::RowLess{}(a.entries, b.entries); }));
  }
}

TEST(EnumerateUm, RelativeCoset) {
  auto z4 = oracle::ring("zmod:4");
  Ideal two = Ideal::parse(z4, {"2"});
  std::size_t expect = 0;
  for (const auto& v : oracle::all_rows(z4, 3)) {
    UmRow u{z4, v};
    expect += is_relative(u, two) && oracle::has_completion(z4, v) ? 1 : 0;
  }
  auto rows = enumerate_um(z4, 3, two);
  EXPECT_EQ(rows.size(), expect);
  for (const auto& v : rows) EXPECT_TRUE(is_relative(v, two));
  EXPECT_THROW(enumerate_um(oracle::ring("int"), 3), AlgebraError);
}

TEST(Generators, AbsoluteCount) {
  auto z2 = oracle::ring("zmod:2");
  GeneratorSet g = elementary_generators(z2, 3, std::nullopt, 0);
  EXPECT_EQ(g.gens.size(), 6u);
  EXPECT_FALSE(g.relative);
  auto z3 = oracle::ring("zmod:3");
  EXPECT_EQ(elementary_generators(z3, 4, std::nullopt, 0).gens.size(), 12u * 2u);
}

TEST(Generators, RelativeDepthZeroArePlain) {
  auto z4 = oracle::ring("zmod:4");
  Ideal two = Ideal::parse(z4, {"2"});
  GeneratorSet g = elementary_generators(z4, 3, two, 0);
  EXPECT_EQ(g.gens.size(), 6u);
  for (const auto& t : g.gens) EXPECT_TRUE(std::holds_alternative<Elem>(t.token.node));
}

TEST(Generators, ConjugatesAreRelativeAndMatchTokens) {
  auto z4 = oracle::ring("zmod:4");
  Ideal two = Ideal::parse(z4, {"2"});
  GeneratorSet g = elementary_generators(z4, 3, two, 1);
  EXPECT_GT(g.gens.size(), 6u);
  oracle::RowSet seen;
  for (std::size_t k = 0; k < g.gens.size(); ++k) {
    Matrix m = g.matrix(k);
    EXPECT_TRUE(in_congruence_level(m, two));
    EXPECT_NE(m, Matrix::identity(z4, 3));
    EXPECT_TRUE(seen.insert(m.entries()).second);
    GroupWord w(z4, 3, {g.gens[k].token});
    EXPECT_EQ(w.evaluate(), m);
    EXPECT_TRUE(w.relative_level(two));
  }
  // Saturation is reported only when a further layer adds nothing.
  GeneratorSet deep = elementary_generators(z4, 3, two, 4);
  GeneratorSet deeper = elementary_generators(z4, 3, two, 5);
  if (deep.saturated) { EXPECT_EQ(deep.gens.size(), deeper.gens.size()); }
}

TEST(Generators, UnitIdealIsAbsolute) {
  auto z3 = oracle::ring("zmod:3");
  GeneratorSet g = elementary_generators(z3, 3, Ideal::unit(z3), 2);
  EXPECT_TRUE(g.saturated);
  EXPECT_EQ(g.gens.size(), 12u);
}

TEST(Codec, RoundTrip) {
  auto r = oracle::ring("zmod:6");
  auto f = FiniteRing::of(r);
  ObjectCodec rows(f, Action::Row, 3);
  for (const auto& v : enumerate_um(r, 3)) EXPECT_EQ(rows.to_row(rows.from_row(v)), v);
  std::mt19937 rng(41);
  ObjectCodec alt(f, Action::Congruence, 4);
  for (int k = 0; k < 50; ++k) {
    Matrix m = oracle::random_alternating(r, 4, rng);
    EXPECT_EQ(alt.to_matrix(alt.from_matrix(m)), m);
  }
}

TEST(Codec, OrderIsLexicographic) {
  auto r = oracle::ring("zmod:3");
  ObjectCodec rows(FiniteRing::of(r), Action::Row, 3);
  auto um = enumerate_um(r, 3);
  for (std::size_t k = 1; k < um.size(); ++k) EXPECT_LT(rows.from_row(um[k - 1]), rows.from_row(um[k]));
}

TEST(Codec, ApplyMatchesMatrixAction) {
  std::mt19937 rng(42);
  auto r = oracle::ring("zmod:4");
  auto f = FiniteRing::of(r);
  GeneratorSet g = elementary_generators(r, 4, Ideal::parse(r, {"2"}), 1);
  ObjectCodec rows(f, Action::Row, 4);
  ObjectCodec alt(f, Action::Congruence, 4);
  for (int k = 0; k < 50; ++k) {
    std::size_t pick = rng() % g.gens.size();
    Matrix e = g.matrix(pick);
    Matrix m = oracle::random_alternating(r, 4, rng);
    EXPECT_EQ(alt.to_matrix(alt.apply(alt.from_matrix(m), g.gens[pick])), e.transpose() * m * e);
    auto v = oracle::all_rows(r, 4)[rng() % 256];
    UmRow u{r, v};
    EXPECT_EQ(rows.to_row(rows.apply(rows.from_row(u), g.gens[pick])).entries, oracle::row_times(*r, v, e));
  }
}

TEST(OrbitBfs, MatchesNaiveClosure) {
  struct Case {
    const char* ring;
    std::optional<std::string> ideal;
    std::size_t depth;
  };
  for (const auto& c : {Case{"zmod:2", std::nullopt, 0}, Case{"zmod:4", std::nullopt, 0},
                        Case{"zmod:4", std::string("2"), 0}, Case{"zmod:4", std::string("2"), 2},
                        Case{"zmod:8", std::string("4"), 1}, Case{"zmod:2,zmod:2", std::nullopt, 0}}) {
    auto r = oracle::ring(c.ring);
    std::optional<Ideal> ideal;
    if (c.ideal) ideal = Ideal::parse(r, {*c.ideal});
    OrbitPartition p = um_orbits(r, 3, ideal, c.depth);
    GeneratorSet g = elementary_generators(r, 3, ideal, c.depth);
    auto objects = enumerate_um(r, 3, ideal);
    auto naive = naive_row_partition(*r, objects, generator_matrices(g));
    ObjectCodec codec(FiniteRing::of(r), Action::Row, 3);
    ASSERT_EQ(p.objects.size(), objects.size());
    EXPECT_TRUE(p.saturated);
    for (const auto& a : objects) {
      for (const auto& b : objects) {
        bool same = p.orbit_of(codec.from_row(a)) == p.orbit_of(codec.from_row(b));
        EXPECT_EQ(same, naive.at(a.entries) == naive.at(b.entries)) << c.ring;
      }
    }
    for (std::uint32_t id = 0; id < p.orbit_count(); ++id) {
      auto members = p.members(id);
      EXPECT_EQ(members.front(), p.representatives[id]);
      EXPECT_EQ(members.size(), p.sizes[id]);
    }
  }
}

TEST(OrbitBfs, SingleOrbitExamples) {
  EXPECT_EQ(um_orbits(oracle::ring("zmod:2"), 3, std::nullopt, 0).orbit_count(), 1u);
  EXPECT_EQ(um_orbits(oracle::ring("zmod:4"), 3, std::nullopt, 0).orbit_count(), 1u);
  EXPECT_EQ(um_orbits(oracle::ring("gf:4"), 3, std::nullopt, 0).orbit_count(), 1u);
}

TEST(OrbitBfs, WordsReachEveryMember) {
  auto r = oracle::ring("zmod:4");
  Ideal two = Ideal::parse(r, {"2"});
  OrbitPartition p = um_orbits(r, 3, two, 2);
  ObjectCodec codec(FiniteRing::of(r), Action::Row, 3);
  for (Code c : p.objects) {
    GroupWord w = p.word_to(c);
    EXPECT_TRUE(w.relative_level(two));
    UmRow rep = codec.to_row(p.representatives[*p.orbit_of(c)]);
    EXPECT_EQ(oracle::row_times(*r, rep.entries, w.evaluate()), codec.to_row(c).entries);
  }
}

TEST(OrbitBfs, BoundFlagsUnsaturated) {
  auto r = oracle::ring("zmod:3");
  OrbitPartition p = um_orbits(r, 3, std::nullopt, 0, 5);
  EXPECT_FALSE(p.saturated);
  EXPECT_GT(p.orbit_count(), 1u);
}

TEST(OrbitBfs, LeavingTheObjectSetThrows) {
  auto r = oracle::ring("zmod:4");
  ObjectCodec codec(FiniteRing::of(r), Action::Row, 3);
  GeneratorSet g = elementary_generators(r, 3, std::nullopt, 0);
  std::vector<Code> partial{codec.from_row(UmRow::unit_vector(r, 3))};
  EXPECT_THROW(orbit_bfs(codec, partial, g), AlgebraError);
}

TEST(AltOrbits, PfaffianOneOverZ2) {
  auto r = oracle::ring("zmod:2");
  OrbitPartition p = alt_orbits(r, 2, Ideal::unit(r), 0);
  EXPECT_TRUE(p.saturated);
  ObjectCodec codec(FiniteRing::of(r), Action::Congruence, 4);
  std::size_t expect = 0;
  for (Code c = 0; c < 64; ++c) expect += pfaffian(codec.to_matrix(c)).str() == "1" ? 1 : 0;
  EXPECT_EQ(p.objects.size(), expect);
  for (Code c : p.objects) {
    Matrix m = codec.to_matrix(c);
    GroupWord w = p.word_to(c);
    Matrix g = w.evaluate();
    EXPECT_EQ(g.transpose() * codec.to_matrix(p.representatives[*p.orbit_of(c)]) * g, m);
  }
}

TEST(WittObjects, RelativeCosets) {
  auto r = oracle::ring("zmod:4");
  Ideal two = Ideal::parse(r, {"2"});
  ObjectCodec codec(FiniteRing::of(r), Action::Congruence, 4);
  auto objs = witt_objects(codec, two);
  std::size_t expect = 0;
  for (Code c = 0; c < 4096; ++c) {
    Matrix m = codec.to_matrix(c);
    expect += pfaffian(m).str() == "1" && standard_form_witness(m, two) ? 1 : 0;
  }
  EXPECT_EQ(objs.size(), expect);
  EXPECT_TRUE(std::is_sorted(objs.begin(), objs.end()));
}

TEST(WittClasses, ChiClassContainsItsOrbit) {
  std::mt19937 rng(43);
  auto r = oracle::ring("zmod:3");
  WittFamily fam = witt_classes_bounded(r, Ideal::unit(r), 2, 1, 2);
  auto base = fam.class_of_matrix(chi(r, 2));
  ASSERT_TRUE(base);
  for (int k = 0; k < 20; ++k) {
    Matrix g = oracle::random_word(r, 4, 6, rng).evaluate();
    EXPECT_EQ(fam.class_of_matrix(g.transpose() * chi(r, 2) * g), base);
  }
}

TEST(WittClasses, RelativeFamilyCertificates) {
  auto r = oracle::ring("zmod:4");
  Ideal two = Ideal::parse(r, {"2"});
  WittFamily fam = witt_classes_bounded(r, two, 2, 1, 2);
  ASSERT_GE(fam.levels.size(), 1u);
  // Padding can only merge classes.
  for (std::size_t k = 1; k < fam.levels.size(); ++k) EXPECT_LE(fam.levels[k].classes, fam.levels[k - 1].classes);
  EXPECT_EQ(fam.class_count(), fam.levels.back().classes);
  for (std::uint32_t a = 0; a < fam.level0.orbit_count(); ++a) {
    for (std::uint32_t b = 0; b < fam.level0.orbit_count(); ++b) {
      auto cert = fam.certificate(a, b);
      EXPECT_EQ(cert.has_value(), fam.class_of[a] == fam.class_of[b]);
      if (!cert) continue;
      WittSymbol x = make_symbol(fam.representative(a), two);
      WittSymbol y = make_symbol(fam.representative(b), two);
      EXPECT_TRUE(verify_equivalence(x, y, *cert));
    }
  }
}

TEST(WittClasses, CertifyArbitraryMembers) {
  auto r = oracle::ring("zmod:2");
  Ideal unit = Ideal::unit(r);
  WittFamily fam = witt_classes_bounded(r, unit, 2, 1, 0);
  ObjectCodec codec(FiniteRing::of(r), Action::Congruence, 4);
  auto objs = fam.level0.objects;
  for (Code x : objs) {
    Matrix mx = codec.to_matrix(x);
    Matrix my = codec.to_matrix(objs.front());
    auto cert = fam.certify(mx, my);
    ASSERT_EQ(cert.has_value(), fam.class_of_matrix(mx) == fam.class_of_matrix(my));
    if (cert) { EXPECT_TRUE(verify_equivalence(make_symbol(mx, unit), make_symbol(my, unit), *cert)); }
  }
}
