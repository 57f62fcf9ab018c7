#include "listcover/pipeline.hpp"

#include "listcover/constructions.hpp"
#include "listcover/io.hpp"

namespace listcover {

namespace {

using Clock = std::chrono::steady_clock;

int require_square(const ListFamily& family) {
  const auto m = static_cast<int>(family.m());
  if (m < 3 || family.list_size() != m - 2)
    throw InputError("the bound pipeline needs m lists of size m-2");
  return m - 2;
}

void finish(RunReport& r, const ListFamily& family, const Hypergraph& full_targets,
            Clock::time_point start) {
  r.full_targets = full_targets.size();
  if (r.value.is_infinite()) {
    r.verified = true;
    r.bound = "family has a transversal smaller than m-2; no bound derived";
  } else {
    r.verified = r.lifted && verify_cover(*r.lifted, full_targets) &&
                 BigInt(r.lifted->size()) == r.value.value();
    r.bound = r.verified ? "n_" + std::to_string(family.m()) + " <= " + r.value.to_string()
                         : "verification failed; no bound derived";
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

}  // namespace

RunReport run_bound_pipeline(const ListFamily& family, SolveMethod method, const ExactOptions& exact) {
  const auto start = Clock::now();
  const int k = require_square(family);
  RunReport r;
  r.m = family.m();
  r.method = std::string(to_string(method));
  r.quotient = quotient_family(family);
  const Hypergraph targets = enumerate_minimal_transversals(r.quotient.family);
  r.quotient_targets = targets.size();
  const Weights w = r.quotient.weights();

  SolveReport solve;
  switch (method) {
    case SolveMethod::kExact:
      solve = solve_exact_min_weighted_cover(targets, w, k, exact);
      break;
    case SolveMethod::kOracle:
      solve = brute_force_min_cover(targets, w, k);
      break;
    case SolveMethod::kGreedy: {
      const auto t0 = Clock::now();
      GreedyCover g = greedy_track_peel_cover(r.quotient);
      solve.method = SolveMethod::kGreedy;
      solve.value = g.value;
      solve.cover = std::move(g.cover);
      solve.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
      break;
    }
  }
  r.value = solve.value;
  if (solve.cover && !solve.value.is_infinite()) r.lifted = lift_cover(*solve.cover, r.quotient);
  r.solve = std::move(solve);
  finish(r, family, enumerate_minimal_transversals(family), start);
  return r;
}

RunReport run_constructed_pipeline(const ListFamily& family, const Cover& cover) {
  const auto start = Clock::now();
  const int k = require_square(family);
  if (cover.k() != k) throw InputError("cover edges must have m-2 colors");
  RunReport r;
  r.m = family.m();
  r.method = "constructed";
  r.quotient = quotient_family(family);
  r.value = CoverValue::finite(BigInt(cover.size()));
  r.lifted = cover;
  finish(r, family, enumerate_minimal_transversals(family), start);
  return r;
}

Cover theorem1_constructed_cover(const ListFamily& base, int copies) {
  const int k = require_square(base);
  const WeightedFamily base_q = quotient_family(base);
  const SolveReport base_solve =
      solve_exact_min_weighted_cover(enumerate_minimal_transversals(base_q.family), base_q.weights(), k);
  if (!base_solve.cover) throw InputError("base family admits no (m-2)-cover");
  const Cover lifted_q = theorem1_lift_cover(*base_solve.cover, base, copies);
  return lift_cover(lifted_q, quotient_family(theorem1_lift(base, copies)));
}

nlohmann::json run_report_json(const RunReport& r, const nlohmann::json& command,
                               const nlohmann::json& input) {
  using nlohmann::json;
  json out{{"version", "0.1.0"},
           {"command", command},
           {"input_digest", io::digest(input)},
           {"m", r.m},
           {"method", r.method},
           {"quotient", io::to_json(r.quotient)},
           {"quotient_targets", r.quotient_targets},
           {"full_targets", r.full_targets},
           {"value", r.value.to_string()},
           {"infinite", r.value.is_infinite()},
           {"verified", r.verified},
           {"bound", r.bound},
           {"ms", r.elapsed.count()}};
  if (r.solve) out["solve"] = io::to_json(*r.solve);
  if (r.lifted) out["lifted_cover_size"] = r.lifted->size();
  return out;
}

}  // namespace listcover
