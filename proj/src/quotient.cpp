#include "listcover/quotient.hpp"

#include <algorithm>
#include <map>

namespace listcover {

std::vector<PartitionClass> membership_pattern_partition(const ListFamily& family) {
  if (family.m() == 0) throw InputError("family must contain at least one list");
  if (family.m() > kMaxColors) throw InputError("too many lists for a membership pattern");
  // Pattern over list indices, reusing Edge as a bit set of lists.
  std::map<std::pair<std::uint64_t, std::uint64_t>, Edge> by_pattern;
  std::vector<std::pair<Color, std::pair<std::uint64_t, std::uint64_t>>> order;
  family.colors().for_each([&](Color c) {
    std::uint64_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < family.m(); ++i)
      if (family[i].contains(c)) (i < 64 ? lo : hi) |= std::uint64_t{1} << (i & 63);
    by_pattern[{lo, hi}].insert(c);
  });
  std::vector<PartitionClass> out;
  out.reserve(by_pattern.size());
  for (const auto& [pattern, members] : by_pattern)
    out.push_back(PartitionClass{members.front(), members});
  std::sort(out.begin(), out.end(), [](const PartitionClass& a, const PartitionClass& b) {
    return a.representative < b.representative;
  });
  return out;
}

WeightedFamily quotient_family(const ListFamily& family) {
  WeightedFamily wf;
  wf.classes = membership_pattern_partition(family);
  Edge reps;
  for (const auto& cls : wf.classes) reps.insert(cls.representative);
  std::vector<Edge> lists;
  lists.reserve(family.m());
  for (const Edge& l : family.lists()) lists.push_back(l & reps);
  wf.family = ListFamily(std::move(lists), family.color_count());
  wf.origin = family;
  return wf;
}

Weights WeightedFamily::weights() const {
  Weights w(origin.color_count(), 0);
  for (const auto& cls : classes) w[cls.representative] = cls.weight();
  return w;
}

const PartitionClass& WeightedFamily::class_of_representative(Color rep) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), rep,
                             [](const PartitionClass& c, Color r) { return c.representative < r; });
  if (it == classes.end() || it->representative != rep)
    throw InputError("color " + std::to_string(rep) + " is not a class representative");
  return *it;
}

BigInt weighted_value(const Cover& cover, const Weights& weights) {
  BigInt total = 0;
  for (const Edge& e : cover.edges()) {
    BigInt product = 1;
    e.for_each([&](Color c) {
      if (c >= weights.size() || weights[c] == 0)
        throw InputError("color " + std::to_string(c) + " has no weight");
      product *= weights[c];
    });
    total += product;
  }
  return total;
}

BigInt weighted_value(const Cover& cover, const WeightedFamily& wf) {
  return weighted_value(cover, wf.weights());
}

Cover lift_cover(const Cover& cover, const WeightedFamily& wf) {
  for (const Edge& e : cover.edges())
    e.for_each([&](Color c) { (void)wf.class_of_representative(c); });
  if (!verify_cover(cover, enumerate_minimal_transversals(wf.family)))
    throw VerificationError("cover does not cover the quotient's minimal transversals");

  std::vector<Edge> lifted;
  for (const Edge& e : cover.edges()) {
    std::vector<Edge> partial{Edge{}};
    e.for_each([&](Color rep) {
      const Edge members = wf.class_of_representative(rep).members;
      std::vector<Edge> next;
      next.reserve(partial.size() * static_cast<std::size_t>(members.size()));
      for (const Edge& p : partial)
        members.for_each([&](Color c) { next.push_back(p | Edge::singleton(c)); });
      partial = std::move(next);
    });
    lifted.insert(lifted.end(), partial.begin(), partial.end());
  }
  return Cover(cover.k(), std::move(lifted));
}

}  // namespace listcover
