#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace listcover {

using Color = std::uint32_t;

/// Upper bound on the number of distinct colors in one instance.
inline constexpr Color kMaxColors = 128;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite set of colors stored as a fixed-width bit vector.
///
/// Subset tests, unions and cardinality are O(1). Iteration and the
/// canonical ordering follow ascending color id.
class Edge {
 public:
  constexpr Edge() = default;
  Edge(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }
  template <class Range>
  static Edge from_range(const Range& colors) {
    Edge e;
    for (auto c : colors) e.insert(static_cast<Color>(c));
    return e;
  }
  static constexpr Edge singleton(Color c) {
    Edge e;
    e.words_[c >> 6] |= std::uint64_t{1} << (c & 63);
    return e;
  }

  void insert(Color c) {
    check(c);
    words_[c >> 6] |= std::uint64_t{1} << (c & 63);
  }
  void erase(Color c) {
    check(c);
    words_[c >> 6] &= ~(std::uint64_t{1} << (c & 63));
  }
  constexpr bool contains(Color c) const {
    return c < kMaxColors && ((words_[c >> 6] >> (c & 63)) & 1) != 0;
  }

  constexpr int size() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

  constexpr bool subset_of(const Edge& other) const {
    return (words_[0] & ~other.words_[0]) == 0 &&
           (words_[1] & ~other.words_[1]) == 0;
  }
  constexpr bool intersects(const Edge& other) const {
    return ((words_[0] & other.words_[0]) | (words_[1] & other.words_[1])) != 0;
  }

  constexpr Edge operator|(const Edge& o) const {
    Edge e;
    e.words_[0] = words_[0] | o.words_[0];
    e.words_[1] = words_[1] | o.words_[1];
    return e;
  }
  constexpr Edge operator&(const Edge& o) const {
    Edge e;
    e.words_[0] = words_[0] & o.words_[0];
    e.words_[1] = words_[1] & o.words_[1];
    return e;
  }
  constexpr Edge operator-(const Edge& o) const {
    Edge e;
    e.words_[0] = words_[0] & ~o.words_[0];
    e.words_[1] = words_[1] & ~o.words_[1];
    return e;
  }
  Edge& operator|=(const Edge& o) { return *this = *this | o; }

  /// Smallest member; undefined on the empty edge.
  constexpr Color front() const {
    return words_[0] != 0 ? static_cast<Color>(std::countr_zero(words_[0]))
                          : static_cast<Color>(64 + std::countr_zero(words_[1]));
  }
  /// Largest member plus one, 0 when empty.
  constexpr Color end_bound() const {
    if (words_[1] != 0) return static_cast<Color>(128 - std::countl_zero(words_[1]));
    if (words_[0] != 0) return static_cast<Color>(64 - std::countl_zero(words_[0]));
    return 0;
  }

  std::vector<Color> members() const {
    std::vector<Color> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Color c) { out.push_back(c); });
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Color>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  constexpr bool operator==(const Edge&) const = default;

  /// Lexicographic order on the ascending member sequences, so {1,3} < {1,3,5}
  /// < {1,4} < {2}.
  friend constexpr bool operator<(const Edge& a, const Edge& b) {
    const Edge diff = a ^ b;
    if (diff.empty()) return false;
    const Color d = diff.front();
    // Below d both sequences agree. The one owning d continues with d; the
    // other continues with something larger or stops.
    if (a.contains(d)) return b.has_member_above(d);
    return !a.has_member_above(d);
  }

  std::size_t hash() const {
    return std::hash<std::uint64_t>{}(words_[0] * 0x9e3779b97f4a7c15ULL ^ words_[1]);
  }

  std::string to_string() const;

 private:
  constexpr Edge operator^(const Edge& o) const {
    Edge e;
    e.words_[0] = words_[0] ^ o.words_[0];
    e.words_[1] = words_[1] ^ o.words_[1];
    return e;
  }
  constexpr bool has_member_above(Color d) const { return end_bound() > d + 1; }

  static void check(Color c) {
    if (c >= kMaxColors)
      throw InputError("color id " + std::to_string(c) + " exceeds the supported range of " +
                       std::to_string(kMaxColors) + " colors");
  }

  std::uint64_t words_[2]{0, 0};
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const { return e.hash(); }
};

/// Every k-element subset of `e`, in lexicographic order.
std::vector<Edge> k_subsets(const Edge& e, int k);

}  // namespace listcover
