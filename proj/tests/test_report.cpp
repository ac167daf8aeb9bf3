#include <gtest/gtest.h>

#include "oracles.hpp"
#include "relwitt/json_io.hpp"
#include "relwitt/report.hpp"
#include "relwitt/unimodular.hpp"

using namespace relwitt;

TEST(Report, FieldOfTwoIsConfirmed) {
  auto r = oracle::ring("zmod:2");
  BijectivityReport rep = vaserstein_report(r, Ideal::unit(r), {2, 1});
  EXPECT_EQ(rep.mse_classes, 1u);
  EXPECT_EQ(rep.witt_classes, 1u);
  EXPECT_EQ(rep.verdict, Verdict::Confirmed);
  EXPECT_TRUE(rep.saturated);
  EXPECT_EQ(rep.body.at("verdict"), "confirmed-within-bounds");
  EXPECT_EQ(rep.body.at("mse").at("rows"), 7);
}

TEST(Report, RelativeZ4) {
  auto r = oracle::ring("zmod:4");
  BijectivityReport rep = vaserstein_report(r, Ideal::parse(r, {"2"}), {2, 1});
  EXPECT_NE(rep.verdict, Verdict::Refuted);
  const auto& map = rep.body.at("map");
  EXPECT_EQ(map.size(), rep.mse_classes);
  for (const auto& entry : map) {
    UmRow v = io::row_from_json(r, entry.at("row"));
    WittSymbol s = vaserstein_symbol(v, Ideal::parse(r, {"2"}));
    EXPECT_EQ(io::to_json(s.rep), entry.at("symbol").at("matrix"));
  }
}

TEST(Report, Deterministic) {
  auto r = oracle::ring("gf:4");
  auto a = vaserstein_report(r, Ideal::unit(r), {2, 1}).body.dump();
  auto b = vaserstein_report(r, Ideal::unit(r), {2, 1}).body.dump();
  EXPECT_EQ(a, b);
}

TEST(Report, VerdictNames) {
  EXPECT_EQ(verdict_name(Verdict::Confirmed), "confirmed-within-bounds");
  EXPECT_EQ(verdict_name(Verdict::Refuted), "refuted");
  EXPECT_EQ(verdict_name(Verdict::Inconclusive), "inconclusive");
}

TEST(JsonIo, RoundTrips) {
  std::mt19937 rng(51);
  auto r = oracle::ring("zmod:5");
  Matrix m = oracle::random_matrix(r, 3, rng);
  EXPECT_EQ(io::matrix_from_json(r, io::to_json(m)), m);
  EXPECT_EQ(io::matrix_from_json(r, m.to_strings()), m);
  GroupWord w = oracle::random_word(r, 4, 3, rng);
  w.push(Token{Conjugated{{Elem{1, 2, r->one()}}, Elem{3, 4, r->from_integer(2)}}});
  w.push(inverse_token(*r, w.tokens().front()));
  GroupWord back = io::word_from_json(r, io::to_json(w));
  EXPECT_EQ(back.tokens(), w.tokens());
  EXPECT_EQ(back.evaluate(), w.evaluate());
  EquivalenceCertificate c{2, w};
  EXPECT_EQ(io::certificate_from_json(r, io::to_json(c)).t, 2u);
  UmRow v = UmRow::parse(r, {"1", "4", "0"});
  EXPECT_EQ(io::row_from_json(r, io::to_json(v)), v);
  EXPECT_THROW(io::matrix_from_json(oracle::ring("zmod:7"), io::to_json(m)), AlgebraError);
}
