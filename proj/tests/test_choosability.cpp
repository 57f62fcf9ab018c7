#include <doctest.h>

#include "listcover/choosability.hpp"
#include "listcover/constructions.hpp"
#include "listcover/quotient.hpp"
#include "listcover/solver.hpp"
#include "support.hpp"

using namespace listcover;
using listcover::testing::Rng;

namespace {

Assignment make(std::vector<Edge> m_side, std::vector<Edge> n_side, Color colors) {
  return {ListFamily(std::move(m_side), colors), ListFamily(std::move(n_side), colors)};
}

bool is_proper(const Assignment& a, const Coloring& c) {
  if (c.m_side.size() != a.m_lists.m() || c.n_side.size() != a.n_lists.m()) return false;
  for (std::size_t i = 0; i < c.m_side.size(); ++i)
    if (!a.m_lists[i].contains(c.m_side[i])) return false;
  for (std::size_t j = 0; j < c.n_side.size(); ++j) {
    if (!a.n_lists[j].contains(c.n_side[j])) return false;
    for (Color x : c.m_side)
      if (x == c.n_side[j]) return false;
  }
  return true;
}

// Witness whose N side is the lifted minimum cover of the quotient.
Assignment cover_witness(const ListFamily& family) {
  const int k = static_cast<int>(family.m()) - 2;
  const WeightedFamily wf = quotient_family(family);
  const SolveReport r = solve_exact_min_weighted_cover(enumerate_minimal_transversals(wf.family), wf.weights(), k);
  const Cover lifted = lift_cover(*r.cover, wf);
  return {family, ListFamily(lifted.edges(), family.color_count())};
}

}  // namespace

TEST_SUITE("choosability") {

TEST_CASE("coloring search examples") {
  const Assignment easy = make({Edge{1, 2}, Edge{3, 4}}, {Edge{1, 3}}, 5);
  const auto c = find_proper_coloring(easy);
  REQUIRE(c);
  CHECK(is_proper(easy, *c));

  auto [mf, nh] = trivial_family(2);
  CHECK_FALSE(find_proper_coloring({mf, ListFamily(nh.edges(), mf.color_count())}));

  const Assignment apart = make({Edge{0, 1}, Edge{2, 3}}, {Edge{4, 5}, Edge{6, 7}}, 8);
  CHECK(find_proper_coloring(apart));
  CHECK(serial::find_proper_coloring(apart));
}

TEST_CASE("transversal criterion examples") {
  CHECK(is_bad_assignment_via_transversals(
      make({Edge{1, 2}, Edge{3, 4}, Edge{1, 3}, Edge{2, 4}}, {Edge{1, 4}, Edge{2, 3}}, 5)));
  CHECK(is_bad_assignment_via_transversals(cover_witness(furedi_family())));
  CHECK_FALSE(is_bad_assignment_via_transversals(make({Edge{1, 2}, Edge{3, 4}}, {}, 5)));
}

TEST_CASE("witness reports") {
  const WitnessReport n4 = verify_witness(cover_witness(n4_witness_family()));
  CHECK(n4.bad);
  CHECK(n4.method_agreement);
  CHECK(n4.m == 4);
  CHECK(n4.n == 2);
  CHECK(n4.implied_bound == "ch(K_{4,2}) >= 3");

  const WitnessReport f = verify_witness(cover_witness(furedi_family()));
  CHECK(f.bad);
  CHECK(f.n == 13);
  CHECK(f.implied_bound == "ch(K_{5,13}) >= 4");

  const WitnessReport l6 = verify_witness(cover_witness(l6_family()));
  CHECK(l6.bad);
  CHECK(l6.method_agreement);
  CHECK(l6.n == 123);
  CHECK(l6.implied_bound == "ch(K_{6,123}) >= 5");

  const WitnessReport good = verify_witness(make({Edge{0, 1}, Edge{2, 3}}, {Edge{0, 2}}, 4));
  CHECK_FALSE(good.bad);
  CHECK(good.method_agreement);
  CHECK(good.implied_bound.empty());

  CHECK_THROWS_AS(verify_witness(make({Edge{0, 1}, Edge{2, 3}}, {Edge{0, 2, 3}}, 4)), InputError);
}

TEST_CASE("coloring search and transversal criterion agree on random assignments") {
  Rng rng(51);
  int bad = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Assignment a = testing::random_assignment(rng);
    const auto coloring = find_proper_coloring(a);
    CAPTURE(trial);
    CHECK(!coloring == is_bad_assignment_via_transversals(a));
    if (coloring) CHECK(is_proper(a, *coloring));
    CHECK(!coloring == !serial::find_proper_coloring(a));
    bad += !coloring;
  }
  CHECK(bad > 0);
}

TEST_CASE("adding an N-list keeps a bad assignment bad") {
  Rng rng(52);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 40; ++trial) {
    const Assignment a = testing::random_assignment(rng);
    if (find_proper_coloring(a)) continue;
    std::vector<Edge> more = a.n_lists.lists();
    more.push_back(testing::random_subset(rng, static_cast<int>(a.m_lists.color_count()), 2));
    const Assignment b{a.m_lists, ListFamily(more, a.m_lists.color_count())};
    CHECK_FALSE(find_proper_coloring(b));
    CHECK(is_bad_assignment_via_transversals(b));
    ++tested;
  }
  CHECK(tested > 0);
}

TEST_CASE("minimum-cover witnesses are minimal") {
  CHECK(witness_is_minimal(cover_witness(n4_witness_family())));
  CHECK(witness_is_minimal(cover_witness(furedi_family())));
  // An extra N-list makes the witness non-minimal.
  Assignment a = cover_witness(n4_witness_family());
  std::vector<Edge> more = a.n_lists.lists();
  more.push_back(Edge{0, 2});
  CHECK_FALSE(witness_is_minimal({a.m_lists, ListFamily(more, a.m_lists.color_count())}));
}

}  // TEST_SUITE
