#include <doctest.h>

#include "listcover/constructions.hpp"
#include "listcover/quotient.hpp"
#include "listcover/solver.hpp"
#include "support.hpp"

using namespace listcover;
using listcover::testing::Rng;

namespace {

std::vector<std::vector<Color>> class_members(const std::vector<PartitionClass>& classes) {
  std::vector<std::vector<Color>> out;
  for (const auto& c : classes) out.push_back(c.members.members());
  return out;
}

// Partition property plus the per-list weight sums.
void check_quotient_invariants(const WeightedFamily& wf) {
  Edge seen;
  for (const auto& c : wf.classes) {
    CHECK(c.members.contains(c.representative));
    CHECK(c.representative == c.members.front());
    CHECK_FALSE(seen.intersects(c.members));
    seen = seen | c.members;
  }
  CHECK(seen == wf.origin.colors());
  const Weights w = wf.weights();
  for (std::size_t i = 0; i < wf.origin.m(); ++i) {
    std::uint64_t sum = 0;
    wf.family[i].for_each([&](Color r) { sum += w[r]; });
    CHECK(sum == static_cast<std::uint64_t>(wf.origin[i].size()));
  }
}

}  // namespace

TEST_SUITE("quotient") {

TEST_CASE("membership partition examples") {
  // Fueredi family, ids are first-appearance: 1->0 6->1 7->2 8->3 9->4 2->5 3->6 4->7 5->8.
  const ListFamily furedi = furedi_family();
  const auto classes = membership_pattern_partition(furedi);
  CHECK(class_members(classes) ==
        std::vector<std::vector<Color>>{{0}, {1}, {2}, {3}, {4}, {5}, {6, 7, 8}});
  CHECK(classes.back().weight() == 3);

  const auto singles = membership_pattern_partition(ListFamily{{0, 1}, {0, 2}, {1, 2}});
  CHECK(singles.size() == 3);
  for (const auto& c : singles) CHECK(c.weight() == 1);
  const auto same = membership_pattern_partition(ListFamily{{1, 2}, {1, 2}});
  REQUIRE(same.size() == 1);
  CHECK(same[0].members == Edge{1, 2});
  CHECK(same[0].weight() == 2);
}

TEST_CASE("quotient family examples") {
  const WeightedFamily wf = quotient_family(furedi_family());
  CHECK(wf.family.lists() ==
        std::vector<Edge>{Edge{0, 1, 2}, Edge{0, 3, 4}, Edge{5, 3, 2}, Edge{5, 1, 4}, Edge{6}});
  const Weights w = wf.weights();
  CHECK(w[6] == 3);
  for (Color c : {0u, 1u, 2u, 3u, 4u, 5u}) CHECK(w[c] == 1);
  check_quotient_invariants(wf);

  const ListFamily plain{{0, 1}, {0, 2}, {1, 2}};
  const WeightedFamily same = quotient_family(plain);
  CHECK(same.family == plain);
  for (const auto& c : same.classes) CHECK(c.weight() == 1);

  const WeightedFamily l6 = quotient_family(l6_family());
  CHECK(l6.classes.size() == 13);
  check_quotient_invariants(l6);
}

TEST_CASE("weighted_value") {
  CHECK(weighted_value(Cover(2, {Edge{1, 4}, Edge{2, 3}}), Weights(5, 1)) == 2);
  Weights w(5, 1);
  w[3] = 3;
  CHECK(weighted_value(Cover(2, {Edge{3, 0}}), w) == 3);
  CHECK_THROWS_AS(weighted_value(Cover(2, {Edge{3, 7}}), w), InputError);
}

TEST_CASE("lift expands classes") {
  const WeightedFamily wf = quotient_family(furedi_family());
  // Representative 6 stands for {6,7,8}. The quotient's 13-value cover lifts to 13 edges.
  const Hypergraph qt = enumerate_minimal_transversals(wf.family);
  const SolveReport r = solve_exact_min_weighted_cover(qt, wf.weights(), 3);
  REQUIRE(r.cover);
  CHECK(r.value.value() == 13);
  const Cover lifted = lift_cover(*r.cover, wf);
  CHECK(lifted.size() == 13);
  CHECK(verify_cover(lifted, enumerate_minimal_transversals(furedi_family())));

  // A single edge through the weight-3 class expands to three edges.
  const ListFamily tiny{{0, 1, 2}, {3, 4, 5}};
  const WeightedFamily twf = quotient_family(tiny);
  CHECK(twf.family.lists() == std::vector<Edge>{Edge{0}, Edge{3}});
  const Cover one(2, {Edge{0, 3}});
  CHECK(lift_cover(one, twf).size() == 9);

  // All-singleton instance: lift is the identity.
  const ListFamily plain{{0, 1}, {2, 3}, {0, 2}, {1, 3}};
  const WeightedFamily pwf = quotient_family(plain);
  const Cover c(2, {Edge{0, 3}, Edge{1, 2}});
  CHECK(lift_cover(c, pwf) == c);
  CHECK_THROWS_AS(lift_cover(Cover(2, {Edge{0, 3}}), pwf), VerificationError);
}

TEST_CASE("value preservation and lift validity on random families") {
  Rng rng(21);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int m = testing::uniform(rng, 2, 5);
    const int size = testing::uniform(rng, 1, 3);
    const ListFamily f = testing::random_blocky_family(rng, m, size, 12);
    const int k = std::max(1, size - 1);
    const WeightedFamily wf = quotient_family(f);
    check_quotient_invariants(wf);
    const Hypergraph full = enumerate_minimal_transversals(f);
    const Hypergraph quot = enumerate_minimal_transversals(wf.family);
    const SolveReport a = solve_exact_min_weighted_cover(full, Weights(f.color_count(), 1), k);
    const SolveReport b = solve_exact_min_weighted_cover(quot, wf.weights(), k);
    CAPTURE(trial);
    REQUIRE(a.value.is_infinite() == b.value.is_infinite());
    if (a.value.is_infinite()) continue;
    CHECK(a.value == b.value);
    const Cover lifted = lift_cover(*b.cover, wf);
    CHECK(verify_cover(lifted, full));
    CHECK(BigInt(lifted.size()) == weighted_value(*b.cover, wf));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("quotient idempotence") {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const ListFamily f = testing::random_blocky_family(rng, testing::uniform(rng, 2, 5),
                                                       testing::uniform(rng, 1, 4), 20);
    const WeightedFamily once = quotient_family(f);
    const WeightedFamily twice = quotient_family(once.family);
    for (const auto& c : twice.classes) CHECK(c.weight() == 1);
    CHECK(twice.family == once.family);
  }
}

}  // TEST_SUITE
