#include <gtest/gtest.h>

#include "oracles.hpp"
#include "relwitt/poly_tools.hpp"

using namespace relwitt;

namespace {

// X1 -> X1, Xi -> Xi + phi^(r_i), expanded with plain products.
MPoly expand(const MPoly& f, const upoly::Coeffs& phi, const std::vector<std::uint64_t>& r) {
  const RingPtr& k = f.ring();
  std::size_t d = f.nvars();
  MPoly phi_poly = MPoly::in_x1(k, d, phi);
  std::vector<MPoly> images;
  images.push_back(MPoly::variable(k, d, 1));
  for (std::size_t i = 2; i <= d; ++i) {
    MPoly power = MPoly::constant(k, d, k->one());
    for (std::uint64_t e = 0; e < r[i - 2]; ++e) power = power * phi_poly;
    images.push_back(MPoly::variable(k, d, i) + power);
  }
  MPoly out(k, d);
  for (const auto& [exps, c] : f.terms()) {
    MPoly term = MPoly::constant(k, d, c);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::uint32_t e = 0; e < exps[i]; ++e) term = term * images[i];
    }
    out = out + term;
  }
  return out;
}

upoly::Coeffs coeffs(const RingPtr& k, std::initializer_list<long long> c) {
  upoly::Coeffs out;
  for (auto x : c) out.push_back(k->from_integer(x));
  return out;
}

void expect_valid(const MPoly& f, const upoly::Coeffs& phi) {
  NagataResult res = nagata_transform(f, phi);
  const RingPtr& k = f.ring();
  EXPECT_TRUE(k->is_unit(res.c));
  EXPECT_TRUE(res.h.is_monic_x1() || (res.h.degree_x1() == 0 && res.h == MPoly::constant(k, f.nvars(), k->one())))
      << res.h.format();
  MPoly g = expand(f, phi, res.substitution.r);
  EXPECT_EQ(g, res.h.scaled(res.c)) << f.format();
  EXPECT_EQ(res.substitution.apply(res.substitution.apply(f), true), f);
}

}  // namespace

TEST(MPoly, ParseFormatRoundTrip) {
  auto k = oracle::ring("zmod:3");
  MPoly f = MPoly::parse(k, 3, "2*X1^2*X2 + X3 - 1");
  EXPECT_EQ(MPoly::parse(k, 3, f.format()), f);
  EXPECT_EQ(f.terms().size(), 3u);
  EXPECT_EQ(f.degree_x1(), 2);
}

TEST(MPoly, Monicity) {
  auto k = oracle::ring("zmod:2");
  EXPECT_TRUE(MPoly::parse(k, 2, "X1^3 + X1*X2 + 1").is_monic_x1());
  EXPECT_FALSE(MPoly::parse(k, 2, "X1^3*X2 + X1").is_monic_x1());
  EXPECT_FALSE(MPoly::parse(k, 2, "X1^2 + X1^2*X2").is_monic_x1());
}

TEST(Nagata, SingleVariableTarget) {
  auto k = oracle::ring("zmod:2");
  MPoly f = MPoly::parse(k, 2, "X2");
  NagataResult res = nagata_transform(f, coeffs(k, {0, 1}));
  ASSERT_EQ(res.substitution.r.size(), 1u);
  EXPECT_EQ(res.substitution.r[0], res.m);
  EXPECT_EQ(res.c, k->one());
  MPoly expect = MPoly::variable(k, 2, 2);
  MPoly x1m = MPoly::constant(k, 2, k->one());
  for (std::uint64_t e = 0; e < res.m; ++e) x1m = x1m * MPoly::variable(k, 2, 1);
  EXPECT_EQ(res.h, expect + x1m);
}

TEST(Nagata, AlreadyMonic) {
  auto k = oracle::ring("zmod:3");
  MPoly f = MPoly::parse(k, 2, "X1 + X2");
  NagataResult res = nagata_transform(f, coeffs(k, {0, 1}));
  EXPECT_EQ(res.c, k->one());
  expect_valid(f, coeffs(k, {0, 1}));
}

TEST(Nagata, Constant) {
  auto k = oracle::ring("zmod:5");
  MPoly f = MPoly::constant(k, 3, k->from_integer(3));
  NagataResult res = nagata_transform(f, coeffs(k, {0, 1}));
  EXPECT_EQ(res.c, k->from_integer(3));
  EXPECT_EQ(res.h, MPoly::constant(k, 3, k->one()));
}

TEST(Nagata, ZeroThrows) {
  auto k = oracle::ring("zmod:2");
  EXPECT_THROW(nagata_transform(MPoly(k, 2), coeffs(k, {0, 1})), AlgebraError);
}

TEST(Nagata, NonMonicCoefficientIsScaledOut) {
  auto k = oracle::ring("zmod:5");
  expect_valid(MPoly::parse(k, 2, "3*X2^2 + X1*X2"), coeffs(k, {1, 1, 1}));
  expect_valid(MPoly::parse(k, 3, "2*X2*X3 + X1^2 + 4"), coeffs(k, {0, 1}));
}

TEST(Nagata, SampleOverGf4) {
  auto k = oracle::ring("gf:4");
  MPoly f(k, 2);
  f.add_term({1, 1}, k->parse("X"));
  f.add_term({0, 2}, k->one());
  f.add_term({0, 0}, k->parse("X+1"));
  expect_valid(f, coeffs(k, {1, 1, 1}));
}

TEST(Nagata, InverseSubstitution) {
  auto k = oracle::ring("zmod:3");
  Substitution s{k, 3, coeffs(k, {1, 1, 1}), {2, 4}};
  MPoly f = MPoly::parse(k, 3, "X1*X2 + X3^2 + 2*X1");
  EXPECT_EQ(s.apply(s.apply(f), true), f);
  EXPECT_EQ(s.apply(s.apply(f, true)), f);
}

TEST(Weierstrass, OverZ9) {
  auto z9 = oracle::ring("zmod:9");
  auto poly = make_ring(RingSpec::polynomial(RingSpec::modular(9), "X"));
  Ideal m = Ideal::parse(z9, {"3"});
  EXPECT_TRUE(is_weierstrass(parse_element(poly, "X^2+3*X+6"), m));
  EXPECT_FALSE(is_weierstrass(parse_element(poly, "X^2+X"), m));
  EXPECT_FALSE(is_weierstrass(parse_element(poly, "2*X^2+3"), m));
  for (int n = 1; n <= 5; ++n) {
    EXPECT_TRUE(is_weierstrass(parse_element(poly, "X^" + std::to_string(n)), m));
  }
}
