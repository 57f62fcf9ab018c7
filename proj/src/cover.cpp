#include "listcover/cover.hpp"

#include <algorithm>

namespace listcover {

Cover::Cover(int k, std::vector<Edge> edges) : k_(k), edges_(std::move(edges)) {
  if (k_ < 0) throw InputError("cover edge size must be non-negative");
  for (const Edge& e : edges_)
    if (e.size() != k_)
      throw InputError("cover edge " + e.to_string() + " does not have " + std::to_string(k_) +
                       " members");
  canonicalize(edges_);
}

namespace {

bool covered(const Edge& target, const std::vector<Edge>& cover) {
  return std::any_of(cover.begin(), cover.end(),
                     [&](const Edge& c) { return c.subset_of(target); });
}

}  // namespace

bool serial::verify_cover(const Cover& cover, const Hypergraph& targets) {
  return std::all_of(targets.edges().begin(), targets.edges().end(),
                     [&](const Edge& t) { return covered(t, cover.edges()); });
}

bool verify_cover(const Cover& cover, const Hypergraph& targets) {
  const auto& ts = targets.edges();
  const auto n = static_cast<std::ptrdiff_t>(ts.size());
  int missing = 0;
#pragma omp parallel for reduction(+ : missing) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    if (!covered(ts[static_cast<std::size_t>(i)], cover.edges())) ++missing;
  return missing == 0;
}

CandidateSet candidate_edges(const Hypergraph& targets, int k) {
  CandidateSet out;
  for (const Edge& t : targets.edges()) {
    if (t.size() < k) {
      out.uncoverable = true;
      continue;
    }
    auto subs = k_subsets(t, k);
    out.edges.insert(out.edges.end(), subs.begin(), subs.end());
  }
  canonicalize(out.edges);
  return out;
}

}  // namespace listcover
