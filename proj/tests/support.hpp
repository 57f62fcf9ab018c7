#pragma once

// Random generators and independent oracles shared by the unit and
// acceptance suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "listcover/choosability.hpp"
#include "listcover/cover.hpp"
#include "listcover/hypergraph.hpp"
#include "listcover/numeric.hpp"

namespace listcover::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Edge random_subset(Rng& rng, int universe, int size) {
  size = std::min(size, universe);
  std::vector<Color> pool(static_cast<std::size_t>(universe));
  for (int i = 0; i < universe; ++i) pool[i] = static_cast<Color>(i);
  std::shuffle(pool.begin(), pool.end(), rng);
  Edge e;
  for (int i = 0; i < size; ++i) e.insert(pool[i]);
  return e;
}

// m lists of `size` colors drawn from 0..colors-1.
inline ListFamily random_family(Rng& rng, int m, int size, int colors) {
  std::vector<Edge> lists;
  for (int i = 0; i < m; ++i) lists.push_back(random_subset(rng, colors, size));
  return ListFamily(std::move(lists), static_cast<Color>(colors));
}

// m lists of `size` colors built from blocks of colors that always travel
// together, so membership patterns repeat.
inline ListFamily random_blocky_family(Rng& rng, int m, int size, int max_colors) {
  for (;;) {
    std::vector<Edge> lists(static_cast<std::size_t>(m));
    Color next = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      while (lists[i].size() < size && ok) {
        const int want = std::min(size - lists[i].size(), uniform(rng, 1, 2));
        // Pick which later lists share this block.
        std::vector<int> owners{i};
        for (int j = i + 1; j < m; ++j)
          if (lists[j].size() + want <= size && uniform(rng, 0, 3) == 0) owners.push_back(j);
        if (static_cast<int>(next) + want > max_colors) {
          ok = false;
          break;
        }
        for (int c = 0; c < want; ++c, ++next)
          for (int o : owners) lists[o].insert(next);
      }
    }
    if (ok) return ListFamily(std::move(lists), next);
  }
}

// Up to 4 M lists and 6 N lists over at most 8 colors. Half of the draws
// pick N lists inside minimal transversals of the M side, which makes bad
// assignments common.
inline Assignment random_assignment(Rng& rng) {
  const int colors = uniform(rng, 3, 8);
  const int size = uniform(rng, 2, 3);
  const int m = uniform(rng, 1, 4);
  const int n = uniform(rng, 0, 6);
  std::vector<Edge> ms, ns;
  for (int i = 0; i < m; ++i) ms.push_back(random_subset(rng, colors, size));
  if (uniform(rng, 0, 1) == 1) {
    // Cover minimal transversals with N lists inside them until n runs out.
    const Hypergraph targets = enumerate_minimal_transversals(ListFamily(ms, static_cast<Color>(colors)));
    for (const Edge& t : targets.edges()) {
      if (static_cast<int>(ns.size()) == n) break;
      bool covered = false;
      for (const Edge& e : ns) covered = covered || e.subset_of(t);
      if (covered || t.size() < size) continue;
      const std::vector<Edge> subsets = k_subsets(t, size);
      ns.push_back(subsets[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(subsets.size()) - 1))]);
    }
  }
  while (static_cast<int>(ns.size()) < n) ns.push_back(random_subset(rng, colors, size));
  return {ListFamily(ms, static_cast<Color>(colors)), ListFamily(ns, static_cast<Color>(colors))};
}

// All color subsets that are transversals, filtered to the inclusion-minimal
// ones. Independent of track enumeration.
inline std::vector<Edge> brute_force_minimal_transversals(const ListFamily& family) {
  const Color v = family.color_count();
  std::vector<Edge> transversals;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask) {
    Edge e;
    for (Color c = 0; c < v; ++c)
      if (mask >> c & 1) e.insert(c);
    bool hits_all = true;
    for (const Edge& l : family.lists()) hits_all = hits_all && l.intersects(e);
    if (hits_all) transversals.push_back(e);
  }
  std::vector<Edge> out;
  for (const Edge& e : transversals) {
    bool minimal = true;
    for (const Edge& f : transversals) minimal = minimal && (f == e || !f.subset_of(e));
    if (minimal) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every k-subset of every target is a candidate; exhaustive search over
// subsets of candidates by increasing value.
inline BigInt naive_min_cover_value(const std::vector<Edge>& targets, const std::vector<std::uint64_t>& w,
                                    int k, bool& infinite) {
  infinite = false;
  std::vector<Edge> cand;
  for (const Edge& t : targets) {
    if (t.size() < k) {
      infinite = true;
      return 0;
    }
    for (const Edge& s : k_subsets(t, k))
      if (std::find(cand.begin(), cand.end(), s) == cand.end()) cand.push_back(s);
  }
  BigInt best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cand.size()); ++mask) {
    BigInt value = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      BigInt p = 1;
      cand[i].for_each([&](Color c) { p *= w[c]; });
      value += p;
    }
    if (best >= 0 && value >= best) continue;
    bool covers = true;
    for (const Edge& t : targets) {
      bool hit = false;
      for (std::size_t i = 0; i < cand.size() && !hit; ++i) hit = (mask >> i & 1) && cand[i].subset_of(t);
      covers = covers && hit;
    }
    if (covers) best = value;
  }
  return best;
}

}  // namespace listcover::testing
