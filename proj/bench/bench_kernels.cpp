// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "listcover/choosability.hpp"
#include "listcover/constructions.hpp"
#include "listcover/formulas.hpp"
#include "listcover/quotient.hpp"
#include "listcover/solver.hpp"

using namespace listcover;

namespace {

const ListFamily& family_m7() {
  static const ListFamily f = theorem2_family({7, {1, 1, 1, 1, 1}});
  return f;
}

const Hypergraph& raw_supports_m7() {
  static const Hypergraph h = [] {
    const ListFamily f = theorem2_family({7, {1, 1, 1, 1, 1}});
    std::vector<Edge> supports;
    for_each_track_support(f, 0, f.track_count(), [&](const Edge& s) { supports.push_back(s); });
    return Hypergraph(f.color_count(), std::move(supports));
  }();
  return h;
}

struct CoverCase {
  Cover cover;
  Hypergraph targets;
};

const CoverCase& theorem3_m7() {
  static const CoverCase c = [] {
    const Theorem3Params p{7, 2, 1};
    return CoverCase{theorem3_cover(p), enumerate_minimal_transversals(theorem3_family(p))};
  }();
  return c;
}

const Assignment& l6_witness() {
  static const Assignment a = [] {
    const WeightedFamily wf = quotient_family(l6_family());
    const SolveReport r =
        solve_exact_min_weighted_cover(enumerate_minimal_transversals(wf.family), wf.weights(), 4);
    const Cover lifted = lift_cover(*r.cover, wf);
    return Assignment{wf.origin, ListFamily(lifted.edges(), wf.origin.color_count())};
  }();
  return a;
}

struct SolveCase {
  Hypergraph targets;
  Weights weights;
  int k;
};

const SolveCase& quotient_m7() {
  static const SolveCase c = [] {
    const WeightedFamily wf = quotient_family(theorem2_family({7, {1, 1, 1, 1, 1}}));
    return SolveCase{enumerate_minimal_transversals(wf.family), wf.weights(), 5};
  }();
  return c;
}

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::enumerate_minimal_transversals(family_m7()));
}
void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal_transversals(family_m7()));
}

void BM_MinimalEdgesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::minimal_edges(raw_supports_m7()));
}
void BM_MinimalEdgesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(minimal_edges(raw_supports_m7()));
}

void BM_VerifySerial(benchmark::State& state) {
  const CoverCase& c = theorem3_m7();
  for (auto _ : state) benchmark::DoNotOptimize(serial::verify_cover(c.cover, c.targets));
}
void BM_VerifyParallel(benchmark::State& state) {
  const CoverCase& c = theorem3_m7();
  for (auto _ : state) benchmark::DoNotOptimize(verify_cover(c.cover, c.targets));
}

void BM_ColoringSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::find_proper_coloring(l6_witness()));
}
void BM_ColoringParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_proper_coloring(l6_witness()));
}

OptimizeOptions fine_grid() {
  OptimizeOptions opt;
  opt.mode = OptimizeMode::kReduced;
  opt.grid_step = 0.001;
  return opt;
}
void BM_OptimizeSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::optimize_theorem2(fine_grid()));
}
void BM_OptimizeParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(optimize_theorem2(fine_grid()));
}

void BM_ExactSerial(benchmark::State& state) {
  const SolveCase& c = quotient_m7();
  for (auto _ : state) benchmark::DoNotOptimize(serial::solve_exact_min_weighted_cover(c.targets, c.weights, c.k));
}
void BM_ExactParallel(benchmark::State& state) {
  const SolveCase& c = quotient_m7();
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact_min_weighted_cover(c.targets, c.weights, c.k));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimalEdgesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimalEdgesParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColoringSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColoringParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizeParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
