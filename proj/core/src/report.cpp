#include "relwitt/report.hpp"

#include <map>

#include "relwitt/json_io.hpp"
#include "relwitt/unimodular.hpp"

namespace relwitt {

namespace {

Verdict combine(std::initializer_list<Verdict> vs) {
  Verdict out = Verdict::Confirmed;
  for (Verdict v : vs) {
    if (v == Verdict::Refuted) return Verdict::Refuted;
    if (v == Verdict::Inconclusive) out = Verdict::Inconclusive;
  }
  return out;
}

nlohmann::json level_json(const WittLevel& l) {
  return {{"t", l.t},
          {"classes", l.classes},
          {"explored", l.explored},
          {"generators", l.generators},
          {"generators_saturated", l.generators_saturated},
          {"saturated", l.saturated},
          {"skipped", l.skipped}};
}

}  // namespace

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Confirmed: return "confirmed-within-bounds";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

BijectivityReport vaserstein_report(const RingPtr& ring, const Ideal& ideal, const ReportOptions& options) {
  using nlohmann::json;
  require_same_ring(*ring, *ideal.ring(), "report");
  OrbitPartition mse = um_orbits(ring, 3, ideal, options.depth, options.bound);
  WittFamily witt = witt_classes_bounded(ring, ideal, 2, options.stabilization, options.depth, options.bound);
  ObjectCodec rows(FiniteRing::of(ring), Action::Row, 3);

  bool mse_exact = mse.saturated && (mse.generators_saturated || mse.orbit_count() == 1);
  bool levels_closed = true, level_gens = true;
  for (const auto& l : witt.levels) {
    levels_closed = levels_closed && l.saturated;
    level_gens = level_gens && l.generators_saturated;
  }
  bool witt_exact = levels_closed && (level_gens || witt.class_count() == 1);

  BijectivityReport rep;
  rep.mse_classes = mse.orbit_count();
  rep.witt_classes = witt.class_count();
  rep.saturated = mse_exact && witt_exact;

  // Symbols of the class representatives.
  std::vector<WittSymbol> symbols;
  std::vector<std::uint32_t> image;
  json map = json::array();
  for (std::uint32_t k = 0; k < mse.orbit_count(); ++k) {
    UmRow v = rows.to_row(mse.representatives[k]);
    UmRow a = *complete_relative(v, ideal);
    WittSymbol s = vaserstein_symbol(v, ideal);
    auto cls = witt.class_of_matrix(s.rep);
    if (!cls) fail(ErrorCode::VerificationFailed, "a symbol fell outside the Witt object set");
    symbols.push_back(s);
    image.push_back(*cls);
    map.push_back({{"mse_class", k},
                   {"row", io::to_json(v)},
                   {"completion", io::to_json(a)},
                   {"symbol", io::to_json(s)},
                   {"witt_class", *cls}});
  }

  // Every row against its class representative.
  std::size_t mismatches = 0, certified = 0;
  json mismatch_list = json::array();
  for (std::size_t k = 0; k < mse.objects.size(); ++k) {
    UmRow v = rows.to_row(mse.objects[k]);
    WittSymbol s = vaserstein_symbol(v, ideal);
    std::uint32_t o = mse.orbit[k];
    auto cls = witt.class_of_matrix(s.rep);
    if (!cls || *cls != image[o]) {
      ++mismatches;
      if (mismatch_list.size() < 8) mismatch_list.push_back({{"row", io::to_json(v)}, {"mse_class", o}});
      continue;
    }
    if (witt.certify(s.rep, symbols[o].rep)) ++certified;
  }
  rep.well_defined = mismatches == 0 ? Verdict::Confirmed : Verdict::Inconclusive;

  std::map<std::uint32_t, std::vector<std::uint32_t>> fibers;
  for (std::uint32_t k = 0; k < image.size(); ++k) fibers[image[k]].push_back(k);
  json collisions = json::array();
  for (const auto& [cls, members] : fibers) {
    if (members.size() < 2) continue;
    std::uint32_t a = members[0], b = members[1];
    auto cert = witt.certify(symbols[a].rep, symbols[b].rep);
    collisions.push_back({{"witt_class", cls},
                          {"mse_classes", {a, b}},
                          {"rows", {map[a]["row"], map[b]["row"]}},
                          {"certificate", cert ? io::to_json(*cert) : json(nullptr)}});
  }
  if (collisions.empty()) {
    rep.injectivity = Verdict::Confirmed;
  } else {
    rep.injectivity = mse_exact ? Verdict::Refuted : Verdict::Inconclusive;
  }

  json unhit = json::array();
  for (std::uint32_t c = 0; c < witt.class_count(); ++c) {
    if (!fibers.count(c)) unhit.push_back(c);
  }
  rep.surjectivity = unhit.empty() ? Verdict::Confirmed : Verdict::Inconclusive;
  rep.verdict = combine({rep.injectivity, rep.surjectivity, rep.well_defined});

  json levels = json::array();
  for (const auto& l : witt.levels) levels.push_back(level_json(l));
  json witt_reps = json::array();
  for (std::uint32_t c = 0; c < witt.class_count(); ++c) witt_reps.push_back(io::to_json(witt.representative(witt.class_rep[c])));
  json mse_reps = json::array();
  for (Code c : mse.representatives) mse_reps.push_back(io::to_json(rows.to_row(c)));

  rep.body = {
      {"schema", "relwitt.report.vaserstein/1"},
      {"ring", spec_to_json(ring->spec())},
      {"ideal", ideal.generator_strings()},
      {"conj_depth", options.depth},
      {"stabilization", options.stabilization},
      {"bound", options.bound},
      {"mse",
       {{"rows", mse.objects.size()},
        {"classes", mse.orbit_count()},
        {"bfs_closed", mse.saturated},
        {"generators", mse.generators},
        {"exact", mse_exact},
        {"representatives", mse_reps}}},
      {"witt",
       {{"size", 4},
        {"objects", witt.level0.objects.size()},
        {"level0_orbits", witt.level0.orbit_count()},
        {"generators", witt.level0.generators},
        {"levels", levels},
        {"merges", witt.merges.size()},
        {"classes", witt.class_count()},
        {"exact", witt_exact},
        {"representatives", witt_reps}}},
      {"map", map},
      {"well_defined",
       {{"verdict", verdict_name(rep.well_defined)},
        {"rows_checked", mse.objects.size()},
        {"certified", certified},
        {"mismatches", mismatch_list}}},
      {"injectivity", {{"verdict", verdict_name(rep.injectivity)}, {"collisions", collisions}}},
      {"surjectivity", {{"verdict", verdict_name(rep.surjectivity)}, {"unhit", unhit}}},
      {"saturated", rep.saturated},
      {"verdict", verdict_name(rep.verdict)},
  };
  return rep;
}

}  // namespace relwitt
