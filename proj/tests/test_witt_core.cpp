#include <gtest/gtest.h>

#include "oracles.hpp"
#include "relwitt/tower.hpp"
#include "relwitt/witt.hpp"

using namespace relwitt;

namespace {

Matrix mat(const RingPtr& r, const std::vector<std::vector<std::string>>& rows) { return Matrix::parse(r, rows); }

Matrix power(const Matrix& m, std::uint64_t k) {
  Matrix out = Matrix::identity(m.ring(), m.rows());
  for (std::uint64_t i = 0; i < k; ++i) out = out * m;
  return out;
}

EquivalenceCertificate cert(std::size_t t, GroupWord w) { return {t, std::move(w)}; }

}  // namespace

TEST(StandardFormWitness, Examples) {
  auto z = oracle::ring("int");
  Ideal two = Ideal::parse(z, {"2"});
  auto w = standard_form_witness(chi(z, 2), two);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (StandardForm{0, 2, 1, 1}));
  Matrix bumped = chi(z, 2);
  bumped.at(0, 2) = z->from_integer(2);
  bumped.at(2, 0) = z->from_integer(-2);
  EXPECT_TRUE(standard_form_witness(bumped, two));
  Matrix three = orth_sum(chi(z, 1), chi(z, 1).scaled(z->from_integer(3)));
  auto w3 = standard_form_witness(three, two);
  ASSERT_TRUE(w3);
  EXPECT_TRUE(congruent_mod_ideal(three, chi(z, *w3), two));
  EXPECT_FALSE(standard_form_witness(three, Ideal::parse(z, {"8"})));
}

TEST(StandardFormWitness, ScanMatchesOracle) {
  std::mt19937 rng(21);
  auto r = oracle::ring("zmod:4");
  Ideal two = Ideal::parse(r, {"2"});
  for (int k = 0; k < 50; ++k) {
    Matrix a = oracle::random_alternating(r, 4, rng);
    bool any = false;
    for (std::size_t rr = 0; rr <= 2; ++rr) {
      for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) any = any || congruent_mod_ideal(a, chi(r, StandardForm{rr, 2, s1, s2}), two);
      }
    }
    auto w = standard_form_witness(a, two);
    EXPECT_EQ(w.has_value(), any);
    if (w) { EXPECT_TRUE(congruent_mod_ideal(a, chi(r, *w), two)); }
  }
}

TEST(MakeSymbol, Rejects) {
  auto z4 = oracle::ring("zmod:4");
  Ideal two = Ideal::parse(z4, {"2"});
  EXPECT_THROW(make_symbol(mat(z4, {{"0", "2"}, {"-2", "0"}}), two), AlgebraError);
  EXPECT_THROW(make_symbol(mat(z4, {{"1", "1"}, {"-1", "0"}}), two), AlgebraError);
  auto z5 = oracle::ring("zmod:5");
  EXPECT_THROW(make_symbol(mat(z5, {{"0", "2"}, {"-2", "0"}}), Ideal::zero(z5)), AlgebraError);
  EXPECT_NO_THROW(make_symbol(mat(z5, {{"0", "4"}, {"-4", "0"}}), Ideal::zero(z5)));
}

TEST(VerifyEquivalence, Reflexive) {
  auto z = oracle::ring("int");
  Ideal two = Ideal::parse(z, {"2"});
  WittSymbol a = make_symbol(chi(z, 2), two);
  EXPECT_TRUE(verify_equivalence(a, a, cert(0, GroupWord(z, 8))));
  EXPECT_THROW(verify_equivalence(a, a, cert(0, GroupWord(z, 4))), AlgebraError);
}

TEST(VerifyEquivalence, ConstructedRelativeWords) {
  std::mt19937 rng(22);
  auto r = oracle::ring("zmod:8");
  Ideal two = Ideal::parse(r, {"2"});
  std::vector<Value> pool{r->from_integer(2), r->from_integer(4), r->from_integer(6)};
  for (int k = 0; k < 20; ++k) {
    WittSymbol alpha = make_symbol(chi(r, 2), two);
    GroupWord eps = oracle::random_word(r, 4, 5, rng, pool);
    Matrix g = eps.evaluate();
    WittSymbol beta = make_symbol(g.transpose() * alpha.rep * g, two);
    // beta (+) chi_2 = eps^T (alpha (+) chi_2) eps on size 8.
    EXPECT_TRUE(verify_equivalence(beta, alpha, cert(0, eps.resized(8))));
    EquivalenceCertificate back = reverse_certificate(cert(0, eps.resized(8)));
    EXPECT_TRUE(verify_equivalence(alpha, beta, back));
  }
}

TEST(VerifyEquivalence, RejectsAbsoluteWord) {
  auto z = oracle::ring("int");
  Ideal two = Ideal::parse(z, {"2"});
  WittSymbol a = make_symbol(chi(z, 2), two);
  GroupWord w(z, 8);
  w.push(Elem{1, 2, z->one()});
  EXPECT_FALSE(verify_equivalence(a, a, cert(0, w)));
}

TEST(Certificates, Compose) {
  std::mt19937 rng(23);
  auto r = oracle::ring("zmod:9");
  Ideal three = Ideal::parse(r, {"3"});
  std::vector<Value> pool{r->from_integer(3), r->from_integer(6)};
  WittSymbol a = make_symbol(chi(r, 2), three);
  GroupWord e1 = oracle::random_word(r, 4, 4, rng, pool);
  GroupWord e2 = oracle::random_word(r, 4, 4, rng, pool);
  Matrix g1 = e1.evaluate(), g2 = e2.evaluate();
  WittSymbol b = make_symbol(g1.transpose() * a.rep * g1, three);
  WittSymbol c = make_symbol(g2.transpose() * b.rep * g2, three);
  EquivalenceCertificate ba = cert(0, e1.resized(8));
  EquivalenceCertificate cb = cert(0, e2.resized(8));
  ASSERT_TRUE(verify_equivalence(b, a, ba));
  ASSERT_TRUE(verify_equivalence(c, b, cb));
  EquivalenceCertificate ca = compose_certificates(c, b, a, cb, ba);
  EXPECT_TRUE(verify_equivalence(c, a, ca));
}

TEST(WittProduct, BlockAssembly) {
  auto r = oracle::ring("zmod:3");
  Ideal unit = Ideal::unit(r);
  WittSymbol c1 = make_symbol(chi(r, 1), unit);
  EXPECT_EQ(witt_product(c1, c1).rep, chi(r, 2));
  Matrix a = mat(r, {{"0", "2", "1", "0"}, {"1", "0", "1", "1"}, {"2", "2", "0", "1"}, {"0", "2", "2", "0"}});
  ASSERT_EQ(pfaffian(a).str(), "1");
  WittSymbol x = make_symbol(a, unit);
  WittSymbol p = witt_product(x, c1);
  EXPECT_EQ(p.rep, orth_sum(a, chi(r, 1)));
  EXPECT_EQ(pfaffian(p.rep), pfaffian(a));
  EXPECT_EQ(p.half(), 3u);
}

TEST(PfUnit, SplitSection) {
  auto z8 = oracle::ring("zmod:8");
  Ideal two = Ideal::parse(z8, {"2"});
  WittSymbol one = split_section(parse_element(z8, "1"), two);
  EXPECT_EQ(one.rep, chi(z8, 1));
  WittSymbol r3 = split_section(parse_element(z8, "3"), two);
  EXPECT_EQ(r3.rep, mat(z8, {{"0", "3"}, {"-3", "0"}}));
  EXPECT_EQ(pf_unit(r3).str(), "3");
  EXPECT_EQ(pf_unit(make_symbol(chi(z8, 3), two)).str(), "1");
  auto z = oracle::ring("int");
  EXPECT_THROW(split_section(parse_element(z, "2"), Ideal::parse(z, {"2"})), AlgebraError);
  EXPECT_THROW(split_section(parse_element(z8, "3"), Ideal::parse(z8, {"4"})), AlgebraError);
  EXPECT_EQ(pf_unit(split_section(parse_element(z8, "5"), Ideal::parse(z8, {"4"}))).str(), "5");
}

TEST(PfUnit, RoundTripOverEveryElementOfC) {
  auto z8 = oracle::ring("zmod:8");
  Ideal two = Ideal::parse(z8, {"2"});
  for (const auto& a : enumerate_elements(z8)) {
    if (!a.is_unit() || !two.contains(a - parse_element(z8, "1"))) continue;
    EXPECT_EQ(pf_unit(split_section(a, two)), a);
  }
}

TEST(Lifts, TildeAndMapI) {
  auto z8 = oracle::ring("zmod:8");
  Ideal two = Ideal::parse(z8, {"2"});
  WittSymbol x = make_symbol(mat(z8, {{"0", "3"}, {"-3", "0"}}), two);
  Matrix lift = tilde_lift_alt(x);
  auto [s, i] = components(lift.element(0, 1));
  EXPECT_EQ(s.str(), "1");
  EXPECT_EQ(i.str(), "2");
  Matrix p = map_i(x);
  auto [a, b] = components(p.element(0, 1));
  EXPECT_EQ(a.str(), "1");
  EXPECT_EQ(b.str(), "3");
  EXPECT_EQ(map_p1(p), chi(z8, 1));
  auto [first, second] = split_pair_matrix(p);
  EXPECT_EQ(first, chi(z8, 1));
  EXPECT_EQ(second, x.rep);
  EXPECT_EQ(join_pair_matrix(p.ring(), first, second), p);
  WittSymbol exact = make_symbol(chi(z8, 2), two);
  Matrix zero_parts = tilde_lift_alt(exact);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) EXPECT_TRUE(components(zero_parts.element(r, c)).second.is_zero());
  }
  Matrix diag = map_i(exact);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      auto [u, v] = components(diag.element(r, c));
      EXPECT_EQ(u, v);
    }
  }
}

TEST(UnipotentRoot, Examples) {
  auto z9 = oracle::ring("zmod:9");
  Matrix gamma = Matrix::identity(z9, 2);
  gamma.at(0, 1) = z9->from_integer(3);
  Matrix delta = unipotent_root(gamma, 2);
  Matrix expect = Matrix::identity(z9, 2);
  expect.at(0, 1) = z9->from_integer(6);
  EXPECT_EQ(delta, expect);
  EXPECT_EQ(delta * delta, gamma);
  EXPECT_EQ(unipotent_root(Matrix::identity(z9, 3), 4), Matrix::identity(z9, 3));
  auto z4 = oracle::ring("zmod:4");
  Matrix g4 = Matrix::identity(z4, 2);
  g4.at(0, 1) = z4->from_integer(2);
  try {
    unipotent_root(g4, 2);
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonInvertibleIndex);
  }
  Matrix not_unipotent = Matrix::identity(z9, 2);
  not_unipotent.at(0, 1) = z9->one();
  not_unipotent.at(1, 0) = z9->one();
  EXPECT_THROW(unipotent_root(not_unipotent, 2), AlgebraError);
}

TEST(UnipotentRoot, NilpotencyIndexAboveSize) {
  auto z27 = oracle::ring("zmod:27");
  Matrix gamma = Matrix::parse(z27, {{"4"}});
  Matrix delta = unipotent_root(gamma, 2);
  EXPECT_EQ(delta * delta, gamma);
}

TEST(UnipotentRoot, PowerGivesBackGamma) {
  std::mt19937 rng(24);
  for (auto [text, p] : {std::pair{"zmod:25", 5}, std::pair{"zmod:9", 3}}) {
    auto r = oracle::ring(text);
    std::uniform_int_distribution<int> pick(0, 24);
    for (int k = 0; k < 10; ++k) {
      Matrix n(r, 3, 3);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) n.at(i, j) = r->from_integer(p * pick(rng));
      }
      Matrix gamma = Matrix::identity(r, 3) + n;
      for (std::uint64_t m : {2u, 3u, 4u}) {
        if (m % static_cast<std::uint64_t>(p) == 0) continue;
        EXPECT_EQ(power(unipotent_root(gamma, m), m), gamma) << text << " m=" << m;
      }
    }
  }
}

TEST(Karoubi, LinearRepresentative) {
  auto px = make_ring(RingSpec::polynomial(RingSpec::integers(), "X"));
  Ideal ix = Ideal::parse(px, {"2"});
  Matrix l = chi(px, 2);
  l.at(0, 2) = px->parse("2*X");
  l.at(2, 0) = px->parse("-2*X");
  WittSymbol lin = make_symbol(l, ix);
  EXPECT_TRUE(karoubi_linear_verify(lin, l, cert(0, GroupWord(px, 8))));

  GroupWord eps(px, 4);
  eps.push(Elem{1, 2, px->parse("2*X")});
  eps.push(Elem{3, 4, px->parse("4*X")});
  eps.push(Elem{4, 1, px->parse("2*X")});
  Matrix g = eps.evaluate();
  WittSymbol x = make_symbol(g.transpose() * l * g, ix);
  bool quadratic = false;
  for (const auto& e : x.rep.entries()) quadratic = quadratic || e.parts.size() > 2;
  EXPECT_TRUE(quadratic);
  EXPECT_TRUE(karoubi_linear_verify(x, l, cert(0, eps.resized(8))));

  Matrix bad = chi(px, 2);
  bad.at(0, 2) = px->parse("2*X^2");
  bad.at(2, 0) = px->parse("-2*X^2");
  EXPECT_THROW(karoubi_linear_verify(x, bad, cert(0, GroupWord(px, 8))), AlgebraError);
  Matrix outside = chi(px, 2);
  outside.at(0, 2) = px->parse("X");
  outside.at(2, 0) = px->parse("-X");
  EXPECT_THROW(karoubi_linear_verify(x, outside, cert(0, GroupWord(px, 8))), AlgebraError);
}
