#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "relwitt/ideal.hpp"
#include "relwitt/orbit.hpp"

namespace relwitt {

enum class Verdict { Confirmed, Refuted, Inconclusive };

/// "confirmed-within-bounds", "refuted", "inconclusive".
std::string_view verdict_name(Verdict v) noexcept;

struct ReportOptions {
  std::size_t depth = 2;
  std::size_t stabilization = 1;
  std::size_t bound = kDefaultOrbitBound;
};

/// Bounded check that MSE_3(R, I) -> W_E(R, I) is a bijection.
///
/// Injectivity is refuted only by two distinct MSE classes with a verified
/// equivalence certificate between their symbols, and only when the MSE
/// partition is exact. An unhit Witt class, or a row whose symbol lands
/// outside its representative's class, is inconclusive: more stabilization
/// could merge classes.
struct BijectivityReport {
  Verdict injectivity = Verdict::Inconclusive;
  Verdict surjectivity = Verdict::Inconclusive;
  Verdict well_defined = Verdict::Inconclusive;
  Verdict verdict = Verdict::Inconclusive;
  bool saturated = false;
  std::size_t mse_classes = 0;
  std::size_t witt_classes = 0;
  nlohmann::json body;
};

BijectivityReport vaserstein_report(const RingPtr& ring, const Ideal& ideal, const ReportOptions& options = {});

}  // namespace relwitt
