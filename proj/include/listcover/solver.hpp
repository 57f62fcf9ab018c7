#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "listcover/cover.hpp"
#include "listcover/quotient.hpp"

namespace listcover {

enum class SolveMethod { kExact, kGreedy, kOracle };

std::string_view to_string(SolveMethod m);
SolveMethod parse_solve_method(std::string_view s);

struct SolveReport {
  CoverValue value = CoverValue::infinite();
  std::optional<Cover> cover;  // present iff value is finite
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
  SolveMethod method = SolveMethod::kExact;
  /// False only when an exact search hit its time limit; value is then an
  /// upper bound from the best cover found.
  bool optimal = true;
};

struct ExactOptions {
  /// Zero disables the limit.
  std::chrono::milliseconds timeout{0};
  /// Use OpenMP tasks for the value search. The reported cover is the same
  /// either way.
  bool parallel = true;
};

/// Minimum of sum(prod(weights of members)) over covers of `targets` by k-sets.
///
/// Branch and bound over candidate_edges(targets, k): fail-first branching on
/// the uncovered target with the fewest live candidates, with a disjoint
/// packing lower bound. Co-optimal ties resolve to the first cover in a fixed
/// serial search order, so the cover does not depend on the thread count.
SolveReport solve_exact_min_weighted_cover(const Hypergraph& targets, const Weights& weights,
                                           int k, const ExactOptions& options = {});

namespace serial {
SolveReport solve_exact_min_weighted_cover(const Hypergraph& targets, const Weights& weights,
                                           int k);
}  // namespace serial

inline constexpr std::size_t kBruteForceCandidateCap = 24;

/// Exhaustive oracle over all subsets of the candidate edges. Refuses (throws
/// InputError) above `cap` candidates.
SolveReport brute_force_min_cover(const Hypergraph& targets, const Weights& weights, int k,
                                  std::size_t cap = kBruteForceCandidateCap);

struct GreedyCover {
  Cover cover;
  CoverValue value = CoverValue::infinite();
};

/// Track peeling on the representative family of `wf`: harvest supports of
/// size m-2 as cover edges, drop every track whose support contains a
/// harvested edge, cut the last coordinate off the survivors and repeat until
/// no track is left.
///
/// Throws InputError ("structure outside greedy domain") when a surviving
/// support has fewer than m-2 colors.
GreedyCover greedy_track_peel_cover(const WeightedFamily& wf);

/// Drops edges whose removal still leaves a cover, scanning from the most
/// expensive edge down. The result is a minimal cover.
Cover prune_redundant_edges(const Cover& cover, const Hypergraph& targets, const Weights& weights);

}  // namespace listcover
