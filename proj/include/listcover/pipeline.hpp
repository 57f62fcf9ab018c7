#pragma once

#include <chrono>
#include <optional>
#include <string>

#include <json.hpp>

#include "listcover/cover.hpp"
#include "listcover/quotient.hpp"
#include "listcover/solver.hpp"

namespace listcover {

/// Outcome of one bound derivation: quotient, cover, lift, verification.
struct RunReport {
  std::size_t m = 0;
  std::string method;
  WeightedFamily quotient;
  std::size_t quotient_targets = 0;
  std::size_t full_targets = 0;
  std::optional<SolveReport> solve;  // absent for constructed covers
  CoverValue value = CoverValue::infinite();
  std::optional<Cover> lifted;       // cover of T(family) by (m-2)-sets
  bool verified = false;
  std::string bound;                 // "n_m <= value" or why none was derived
  std::chrono::milliseconds elapsed{0};
};

/// Quotients `family` (m lists of size m-2), covers the quotient's minimal
/// transversals with the given method, lifts the cover back and verifies it
/// against every minimal transversal of `family`.
RunReport run_bound_pipeline(const ListFamily& family, SolveMethod method,
                             const ExactOptions& exact = {});

/// Verifies a ready-made cover of T(family) and reports its size as the bound.
RunReport run_constructed_pipeline(const ListFamily& family, const Cover& cover);

/// Full cover of T(theorem1_lift(base, copies)) obtained from an exact
/// quotient cover of the base.
Cover theorem1_constructed_cover(const ListFamily& base, int copies);

/// The report as JSON; `command` and `input` are echoed verbatim.
nlohmann::json run_report_json(const RunReport& r, const nlohmann::json& command,
                               const nlohmann::json& input);

}  // namespace listcover
