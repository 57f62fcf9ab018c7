// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "listcover/choosability.hpp"
#include "listcover/constructions.hpp"
#include "listcover/formulas.hpp"
#include "listcover/quotient.hpp"
#include "listcover/solver.hpp"
#include "support.hpp"

using namespace listcover;
using listcover::testing::Rng;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Rational q(std::int64_t n, std::int64_t d) { return make_rational(n, d); }

// Quotient, exact cover and lift on one family.
Outcome cover_and_lift(const ListFamily& family, int expected) {
  Outcome o;
  const int k = static_cast<int>(family.m()) - 2;
  const WeightedFamily wf = quotient_family(family);
  const SolveReport r = solve_exact_min_weighted_cover(enumerate_minimal_transversals(wf.family), wf.weights(), k);
  o.require(!r.value.is_infinite() && r.value.value() == expected,
            "exact value " + r.value.to_string() + " != " + std::to_string(expected));
  if (!o.ok) return o;
  const Cover lifted = lift_cover(*r.cover, wf);
  o.require(lifted.size() == static_cast<std::size_t>(expected),
            "lifted cover has " + std::to_string(lifted.size()) + " edges");
  o.require(verify_cover(lifted, enumerate_minimal_transversals(family)), "lifted cover does not verify");
  return o;
}

Outcome n5_witness() {
  Outcome o = cover_and_lift(theorem2_family({5, {1, 1, 1, 0, 0}}), 13);
  if (!o.ok) return o;
  o = cover_and_lift(furedi_family(), 13);
  if (!o.ok) return o;
  o.require(q(13, 27) * 27 == 13, "13/27 * 3^3 != 13");
  if (o.ok) o.detail = "value 13 on the constructed and the printed family, 13 lifted edges verify";
  return o;
}

Outcome n6_witness() {
  Outcome o;
  const WeightedFamily wf = quotient_family(theorem2_family({6, {1, 1, 0, 1, 1}}));
  const GreedyCover g = greedy_track_peel_cover(wf);
  o.require(g.value.value() == 123, "greedy value " + g.value.to_string());
  const Hypergraph targets = enumerate_minimal_transversals(wf.family);
  o.require(verify_cover(g.cover, targets), "greedy cover does not verify");
  const SolveReport r = solve_exact_min_weighted_cover(targets, wf.weights(), 4);
  o.require(!r.value.is_infinite() && r.value.value() <= 123, "exact value " + r.value.to_string());
  o.require(theorem2_value({{q(1, 4), q(1, 4), 0, q(1, 4), q(1, 4)}}) == q(123, 256), "polynomial != 123/256");
  if (o.ok) o.detail = "greedy 123, exact " + r.value.to_string() + ", polynomial 123/256";
  return o;
}

Outcome polynomial_anchors() {
  Outcome o;
  o.require(theorem2_value({{q(1, 3), q(1, 3), q(1, 3), 0, 0}}) == q(13, 27), "full polynomial != 13/27");
  o.require(theorem2_reduced_value(0, 0) == q(13, 27), "reduced polynomial != 13/27");
  if (o.ok) o.detail = "both 13/27";
  return o;
}

Outcome optimizer() {
  Outcome o;
  OptimizeOptions opt;
  opt.mode = OptimizeMode::kReduced;
  const OptimizeResult r = optimize_theorem2(opt);
  char buf[160];
  std::snprintf(buf, sizeof buf, "min %.6f at (%.4f, %.4f)", r.value, r.alpha[3], r.alpha[4]);
  o.require(std::abs(r.value - 0.4642) <= 5e-4, buf);
  o.require(std::abs(r.alpha[3] - 0.1969) <= 2e-3 && std::abs(r.alpha[4] - 0.2123) <= 2e-3, buf);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome theorem1_lift_check() {
  Outcome o;
  const ListFamily base = n4_witness_family();
  const WeightedFamily bq = quotient_family(base);
  const SolveReport b = solve_exact_min_weighted_cover(enumerate_minimal_transversals(bq.family), bq.weights(), 2);
  o.require(!b.value.is_infinite() && b.value.value() == 2, "base value " + b.value.to_string());
  if (!o.ok) return o;
  const ListFamily lifted = theorem1_lift(base, 2);
  o.require(lifted.m() == 6 && lifted.list_size() == 4, "lifted family is not 6 lists of size 4");
  const Cover qcover = theorem1_lift_cover(*b.cover, base, 2);
  const WeightedFamily lq = quotient_family(lifted);
  const BigInt value = weighted_value(qcover, lq);
  o.require(value == 128 && value == pow_big(4, 4) / 2, "lifted value " + value.str());
  const Cover full = lift_cover(qcover, lq);
  o.require(full.size() == 128, "expanded cover has " + std::to_string(full.size()) + " edges");
  o.require(verify_cover(full, enumerate_minimal_transversals(lifted)), "lifted cover does not verify");
  if (o.ok) o.detail = "base 2, lifted value 128, 128 edges verify";
  return o;
}

Outcome theorem3() {
  Outcome o;
  const Theorem3Params p{6, 2, 1};
  const Cover c = theorem3_cover(p);
  o.require(c.size() == 163 && theorem3_value(6, 2, 1) == 163, "cover/formula != 163");
  o.require(verify_cover(c, enumerate_minimal_transversals(theorem3_family(p))), "cover does not verify");
  for (int m : {10, 20}) {
    int best = 0;
    for (int l = 1; 2 + l <= m - 2; ++l)
      if (theorem3_value(m, 2, l) < theorem3_value(m, 2, best)) best = l;
    o.require(theorem3_optimal_l(m, 2) == best, "optimal l mismatch at m=" + std::to_string(m));
  }
  const double ratio = ratio_to_double(theorem3_value(500, 2, theorem3_optimal_l(500, 2)), pow_big(498, 498));
  char buf[120];
  std::snprintf(buf, sizeof buf, "163 verifies, m=500 ratio %.6f vs %.6f", ratio, asymptotic_coefficient());
  o.require(std::abs(ratio - asymptotic_coefficient()) < 0.002, buf);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome coloring_equivalence() {
  Outcome o;
  Rng rng(7001);
  int bad = 0, disagreements = 0;
  const int trials = 250;
  for (int t = 0; t < trials; ++t) {
    const Assignment a = testing::random_assignment(rng);
    const bool none = !find_proper_coloring(a);
    disagreements += none != is_bad_assignment_via_transversals(a);
    bad += none;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (o.ok) o.detail = std::to_string(trials) + " assignments, " + std::to_string(bad) + " bad, 0 disagreements";
  return o;
}

Outcome quotient_value_preservation() {
  Outcome o;
  Rng rng(8001);
  int families = 0, finite = 0;
  while (families < 120) {
    const int m = testing::uniform(rng, 2, 5), size = testing::uniform(rng, 1, 3);
    const ListFamily f = testing::random_blocky_family(rng, m, size, 12);
    const WeightedFamily wf = quotient_family(f);
    if (wf.classes.size() == static_cast<std::size_t>(f.colors().size())) continue;  // need a repeated pattern
    ++families;
    const int k = testing::uniform(rng, 1, size);
    const Hypergraph full = enumerate_minimal_transversals(f);
    const SolveReport a = solve_exact_min_weighted_cover(full, Weights(f.color_count(), 1), k);
    const SolveReport b =
        solve_exact_min_weighted_cover(enumerate_minimal_transversals(wf.family), wf.weights(), k);
    if (a.value != b.value) {
      o.require(false, "full " + a.value.to_string() + " vs quotient " + b.value.to_string());
      break;
    }
    if (b.value.is_infinite()) continue;
    ++finite;
    const Cover lifted = lift_cover(*b.cover, wf);
    o.require(verify_cover(lifted, full) && BigInt(lifted.size()) == b.value.value(),
              "lifted quotient optimum fails on the full instance");
  }
  if (o.ok) o.detail = std::to_string(families) + " families, " + std::to_string(finite) + " finite, all equal";
  return o;
}

Outcome solver_exactness() {
  Outcome o;
  Rng rng(9001);
  int instances = 0;
  while (instances < 120) {
    const int colors = testing::uniform(rng, 4, 9), k = testing::uniform(rng, 1, 3);
    std::vector<Edge> raw;
    const int count = testing::uniform(rng, 1, 7);
    for (int i = 0; i < count; ++i) raw.push_back(testing::random_subset(rng, colors, testing::uniform(rng, k, k + 2)));
    const Hypergraph t = minimal_edges(Hypergraph(static_cast<Color>(colors), raw));
    if (candidate_edges(t, k).edges.size() > kBruteForceCandidateCap) continue;
    Weights w(static_cast<std::size_t>(colors));
    for (auto& x : w) x = static_cast<std::uint64_t>(testing::uniform(rng, 1, 5));
    ++instances;
    const SolveReport e = solve_exact_min_weighted_cover(t, w, k);
    const SolveReport b = brute_force_min_cover(t, w, k);
    o.require(e.value == b.value, "exact " + e.value.to_string() + " vs oracle " + b.value.to_string());
  }
  int families = 0;
  for (; families < 60; ++families) {
    const int colors = testing::uniform(rng, 2, 10);
    const ListFamily f = testing::random_family(rng, testing::uniform(rng, 1, 5),
                                                testing::uniform(rng, 1, std::min(colors, 4)), colors);
    o.require(enumerate_minimal_transversals(f).edges() == testing::brute_force_minimal_transversals(f),
              "minimal transversal mismatch");
  }
  if (o.ok)
    o.detail = std::to_string(instances) + " cover instances, " + std::to_string(families) + " enumeration families";
  return o;
}

struct Criterion {
  const char* name;
  std::chrono::milliseconds limit;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  using namespace std::chrono_literals;
  const Criterion criteria[] = {
      {"n5 witness", 5s, n5_witness},
      {"n6 witness", 60s, n6_witness},
      {"polynomial anchors", 5s, polynomial_anchors},
      {"optimizer", 10s, optimizer},
      {"theorem 1 lift", 30s, theorem1_lift_check},
      {"theorem 3", 30s, theorem3},
      {"coloring/transversal equivalence", 10s, coloring_equivalence},
      {"quotient value preservation", 60s, quotient_value_preservation},
      {"solver exactness", 60s, solver_exactness},
  };
  int failed = 0, index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (o.ok && ms > c.limit) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(c.limit.count()) + " ms limit)";
    }
    failed += !o.ok;
    std::printf("%s %d %s [%lld ms] %s\n", o.ok ? "PASS" : "FAIL", index, c.name,
                static_cast<long long>(ms.count()), o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
