#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "listcover/edge.hpp"

namespace listcover {

/// An ordered family of color lists, the M side of a list assignment.
///
/// Colors live in 0..color_count()-1. Families produced by loaders and
/// constructors are canonical (every id in that range is used); quotient
/// families keep their origin's id space and only use the representatives.
class ListFamily {
 public:
  ListFamily() = default;
  /// color_count defaults to one past the largest color present.
  explicit ListFamily(std::vector<Edge> lists, std::optional<Color> color_count = std::nullopt);
  ListFamily(std::initializer_list<std::initializer_list<Color>> lists);

  std::size_t m() const { return lists_.size(); }
  const std::vector<Edge>& lists() const { return lists_; }
  const Edge& operator[](std::size_t i) const { return lists_[i]; }
  Color color_count() const { return color_count_; }
  Edge colors() const;

  /// Common cardinality of the lists, or nullopt when sizes differ.
  std::optional<int> list_size() const;
  /// True when every id below color_count() occurs in some list.
  bool is_dense() const;
  /// Number of tracks, the product of the list sizes.
  std::uint64_t track_count() const;

  bool operator==(const ListFamily&) const = default;

 private:
  std::vector<Edge> lists_;
  Color color_count_ = 0;
};

/// One color per list, in list order.
using Track = std::vector<Color>;

/// Throws InputError unless `track` picks one member from each list.
void check_track(const Track& track, const ListFamily& family);

class Hypergraph {
 public:
  Hypergraph() = default;
  /// Deduplicates and sorts the edges canonically.
  Hypergraph(Color vertex_count, std::vector<Edge> edges);

  Color vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Edge& e) const;

  bool operator==(const Hypergraph&) const = default;

 private:
  Color vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Sorts and deduplicates in canonical edge order.
void canonicalize(std::vector<Edge>& edges);

bool is_transversal(const Edge& candidate, const ListFamily& family);

/// The set of distinct colors chosen by `track`.
Edge track_support(const Track& track);

/// Calls f(support) for every track whose mixed-radix index lies in
/// [first, last). Index digits run over the lists with the last list fastest.
template <class F>
void for_each_track_support(const ListFamily& family, std::uint64_t first, std::uint64_t last,
                            F&& f);

/// Inclusion-minimal edges of `h` (an antichain).
Hypergraph minimal_edges(const Hypergraph& h);

/// The cover hypergraph of T(family): its inclusion-minimal transversals.
/// Uses every available OpenMP thread to enumerate tracks.
Hypergraph enumerate_minimal_transversals(const ListFamily& family);

namespace serial {
Hypergraph minimal_edges(const Hypergraph& h);
Hypergraph enumerate_minimal_transversals(const ListFamily& family);
}  // namespace serial

// --- implementation ----------------------------------------------------------

template <class F>
void for_each_track_support(const ListFamily& family, std::uint64_t first, std::uint64_t last,
                            F&& f) {
  const std::size_t m = family.m();
  if (first >= last || m == 0) return;
  std::vector<std::vector<Color>> members(m);
  for (std::size_t i = 0; i < m; ++i) members[i] = family[i].members();

  // Decode `first` into digits.
  std::vector<std::size_t> digit(m);
  std::uint64_t rest = first;
  for (std::size_t i = m; i-- > 0;) {
    digit[i] = rest % members[i].size();
    rest /= members[i].size();
  }
  // prefix[i] is the support of the choices in lists 0..i-1.
  std::vector<Edge> prefix(m + 1);
  for (std::size_t i = 0; i < m; ++i)
    prefix[i + 1] = prefix[i] | Edge::singleton(members[i][digit[i]]);

  for (std::uint64_t idx = first;;) {
    f(prefix[m]);
    if (++idx == last) break;
    std::size_t i = m;
    while (i-- > 0) {
      if (++digit[i] < members[i].size()) break;
      digit[i] = 0;
    }
    for (std::size_t j = i; j < m; ++j)
      prefix[j + 1] = prefix[j] | Edge::singleton(members[j][digit[j]]);
  }
}

}  // namespace listcover
