#pragma once

#include <cstdint>
#include <vector>

#include "listcover/cover.hpp"
#include "listcover/hypergraph.hpp"
#include "listcover/numeric.hpp"

namespace listcover {

/// Colors that occur in exactly the same lists, represented by the smallest id.
struct PartitionClass {
  Color representative = 0;
  Edge members;
  std::uint64_t weight() const { return static_cast<std::uint64_t>(members.size()); }

  bool operator==(const PartitionClass&) const = default;
};

/// Per-color weights indexed by color id; zero for non-representatives.
using Weights = std::vector<std::uint64_t>;

/// A list family collapsed to one representative per membership class.
///
/// `family` keeps the origin's color id space. For every origin list the
/// weights of its representatives sum to that list's size.
struct WeightedFamily {
  ListFamily family;
  std::vector<PartitionClass> classes;  // sorted by representative
  ListFamily origin;

  Weights weights() const;
  const PartitionClass& class_of_representative(Color rep) const;
};

/// Groups colors by list-membership pattern. Classes are sorted by representative.
std::vector<PartitionClass> membership_pattern_partition(const ListFamily& family);

WeightedFamily quotient_family(const ListFamily& family);

/// Sum over cover edges of the product of member weights.
BigInt weighted_value(const Cover& cover, const WeightedFamily& wf);
BigInt weighted_value(const Cover& cover, const Weights& weights);

/// Expands every edge over all member combinations of its classes.
/// Throws VerificationError unless `cover` covers the quotient's minimal
/// transversals.
Cover lift_cover(const Cover& cover, const WeightedFamily& wf);

}  // namespace listcover
