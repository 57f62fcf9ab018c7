#pragma once

#include <array>
#include <utility>
#include <vector>

#include "listcover/cover.hpp"
#include "listcover/hypergraph.hpp"
#include "listcover/numeric.hpp"
#include "listcover/quotient.hpp"

namespace listcover {

/// Five special lists l1..l5 plus m-5 disjoint lists. k1..k3 are the pairwise
/// overlaps l1l2=l3l4, l1l3=l2l4, l1l4=l2l3; k4 is the overlap of each of
/// l1..l4 with l5; k5 is the private part of each of l1..l4.
struct Theorem2Params {
  int m = 5;
  std::array<int, 5> k{};

  void validate() const;
};

/// l1, l2, l3 share k colors; l2, l3 share l further colors; each remaining
/// color of l1 also sits in exactly one of l4, l5, ...
struct Theorem3Params {
  int m = 6;
  int k = 2;
  int l = 0;

  void validate() const;
};

ListFamily theorem2_family(const Theorem2Params& p);

ListFamily theorem3_family(const Theorem3Params& p);

/// The three-part cover of T(theorem3_family(p)): tracks through a shared
/// color of l1, l2, l3; tracks through a color of (l2 & l3) \ l1 whose l1
/// color is reused by its other list; and, with the last list dropped, tracks
/// taking private colors from l2 and l3 with the l1 color reused.
Cover theorem3_cover(const Theorem3Params& p);

struct Theorem3CoverParts {
  BigInt shared_triple;
  BigInt shared_pair;
  BigInt private_pair;
};
/// Edge count of each part of theorem3_cover, counted while building it.
Theorem3CoverParts theorem3_cover_parts(const Theorem3Params& p);

/// k color-disjoint copies of a square base family (m lists of size m-2) laid
/// side by side, copy 0 being the base itself, plus m'-m fresh disjoint lists
/// where m' = k(m-2)+2.
ListFamily theorem1_lift(const ListFamily& base, int copies);

/// Carries a cover of the base quotient over to the lifted quotient by adding
/// the representative of every fresh list to each edge.
Cover theorem1_lift_cover(const Cover& base_quotient_cover, const ListFamily& base, int copies);

/// m disjoint m-lists on the M side and all m^m track supports on the N side.
std::pair<ListFamily, Hypergraph> trivial_family(int m);

/// ((m-1)^(m-1) - (m-2)^(m-1), m^m): the n with ch(K_{m,n}) = m are low <= n < high.
std::pair<BigInt, BigInt> hoffman_johnson_range(int m);

/// Lists given with arbitrary integer colors, relabeled densely in order of
/// first appearance.
ListFamily family_from_labels(const std::vector<std::vector<long long>>& lists);

/// {{1,6,7},{1,8,9},{2,8,7},{2,6,9},{3,4,5}}, relabeled.
ListFamily furedi_family();
/// The six 4-lists giving a cover of size 123, relabeled.
ListFamily l6_family();
/// {{1,2},{3,4},{1,3},{2,4}}, relabeled.
ListFamily n4_witness_family();

/// Sorted multiset of list-membership patterns; equal for two families iff
/// they agree up to renaming colors (list order fixed).
std::vector<std::vector<int>> membership_signature(const ListFamily& family);

}  // namespace listcover
