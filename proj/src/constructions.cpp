#include "listcover/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace listcover {

namespace {

// Allocates color ids block by block in call order.
class LayoutBuilder {
 public:
  explicit LayoutBuilder(std::size_t lists) : lists_(lists) {}

  void block(int size, std::initializer_list<std::size_t> owners) {
    for (int i = 0; i < size; ++i, ++next_)
      for (std::size_t o : owners) lists_[o].insert(next_);
  }
  void fill_to(std::size_t list, int size) { block(size - lists_[list].size(), {list}); }

  ListFamily build() && { return ListFamily(std::move(lists_), next_); }

 private:
  std::vector<Edge> lists_;
  Color next_ = 0;
};

void expect(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("construction self-check failed: ") + what);
}

int overlap(const ListFamily& f, std::size_t a, std::size_t b) { return (f[a] & f[b]).size(); }

}  // namespace

void Theorem2Params::validate() const {
  if (m < 5) throw InputError("theorem 2 structure needs m >= 5");
  int sum = 0;
  for (int ki : k) {
    if (ki < 0) throw InputError("k1..k5 must be non-negative");
    sum += ki;
  }
  if (sum != m - 2) throw InputError("k1+k2+k3+k4+k5 must equal m-2");
  if (4 * k[3] > m - 2) throw InputError("4*k4 must not exceed m-2");
}

void Theorem3Params::validate() const {
  if (m < 6) throw InputError("theorem 3 structure needs m >= 6");
  if (k < 2) throw InputError("theorem 3 structure needs k >= 2");
  if (l < 0) throw InputError("l must be non-negative");
  if (k + l > m - 2) throw InputError("k + l must not exceed m-2");
}

ListFamily theorem2_family(const Theorem2Params& p) {
  p.validate();
  const int m = p.m;
  const auto [k1, k2, k3, k4, k5] = p.k;
  LayoutBuilder b(static_cast<std::size_t>(m));
  b.block(k1, {0, 1});
  b.block(k1, {2, 3});
  b.block(k2, {0, 2});
  b.block(k2, {1, 3});
  b.block(k3, {0, 3});
  b.block(k3, {1, 2});
  for (std::size_t i = 0; i < 4; ++i) b.block(k4, {i, 4});
  for (std::size_t i = 0; i < 4; ++i) b.block(k5, {i});
  b.block(m - 2 - 4 * k4, {4});
  for (std::size_t i = 5; i < static_cast<std::size_t>(m); ++i) b.block(m - 2, {i});
  ListFamily f = std::move(b).build();

  expect(f.list_size() == m - 2, "list sizes");
  expect(overlap(f, 0, 1) == k1 && overlap(f, 2, 3) == k1, "k1 overlaps");
  expect(overlap(f, 0, 2) == k2 && overlap(f, 1, 3) == k2, "k2 overlaps");
  expect(overlap(f, 0, 3) == k3 && overlap(f, 1, 2) == k3, "k3 overlaps");
  for (std::size_t i = 0; i < 4; ++i) expect(overlap(f, i, 4) == k4, "k4 overlaps");
  for (std::size_t a = 0; a < f.m(); ++a)
    for (std::size_t b2 = a + 1; b2 < f.m(); ++b2) {
      if (b2 >= 5) expect(overlap(f, a, b2) == 0, "tail lists disjoint");
      for (std::size_t c = b2 + 1; c < f.m(); ++c)
        expect((f[a] & f[b2] & f[c]).empty(), "empty triple intersections");
    }
  return f;
}

ListFamily theorem3_family(const Theorem3Params& p) {
  p.validate();
  const int m = p.m, k = p.k, l = p.l;
  const int singles = m - 2 - k;
  LayoutBuilder b(static_cast<std::size_t>(m));
  b.block(k, {0, 1, 2});
  b.block(l, {1, 2});
  for (int a = 0; a < singles; ++a) b.block(1, {0, static_cast<std::size_t>(3 + a)});
  for (std::size_t i = 1; i < static_cast<std::size_t>(m); ++i) b.fill_to(i, m - 2);
  ListFamily f = std::move(b).build();

  expect(f.list_size() == m - 2, "list sizes");
  expect((f[0] & f[1] & f[2]).size() == k, "triple overlap k");
  expect(((f[1] & f[2]) - f[0]).size() == l, "l2,l3 overlap outside l1");
  for (std::size_t i = 3; i < f.m(); ++i) {
    const bool holds_single = static_cast<int>(i) < 3 + singles;
    expect(overlap(f, 0, i) == (holds_single ? 1 : 0), "l1 singles");
    for (std::size_t j = 1; j < f.m(); ++j)
      if (j != i) expect(overlap(f, i, j) == 0, "later lists private");
  }
  return f;
}

namespace {

// Calls f(edge) for each choice of one color from each of lists[first, last),
// restricted to choices that reuse at least one l1 color when `need_single`.
void for_each_choice(const ListFamily& f, std::size_t first, std::size_t last, bool need_single,
                     const std::function<void(const Edge&)>& fn) {
  std::function<void(std::size_t, Edge, bool)> rec = [&](std::size_t i, Edge acc, bool single) {
    if (i == last) {
      if (single || !need_single) fn(acc);
      return;
    }
    f[i].for_each([&](Color c) { rec(i + 1, acc | Edge::singleton(c), single || f[0].contains(c)); });
  };
  rec(first, Edge{}, false);
}

struct Theorem3Build {
  Cover cover;
  Theorem3CoverParts parts;
};

Theorem3Build build_theorem3_cover(const Theorem3Params& p) {
  const ListFamily f = theorem3_family(p);
  const std::size_t m = f.m();
  const Edge shared = f[0] & f[1] & f[2];
  const Edge pair = (f[1] & f[2]) - f[0];
  const Edge own2 = f[1] - f[0] - f[2];
  const Edge own3 = f[2] - f[0] - f[1];

  std::vector<Edge> edges;
  Theorem3Build out;
  shared.for_each([&](Color c) {
    for_each_choice(f, 3, m, false, [&](const Edge& e) {
      edges.push_back(e | Edge::singleton(c));
      ++out.parts.shared_triple;
    });
  });
  pair.for_each([&](Color j) {
    for_each_choice(f, 3, m, true, [&](const Edge& e) {
      edges.push_back(e | Edge::singleton(j));
      ++out.parts.shared_pair;
    });
  });
  own2.for_each([&](Color u2) {
    own3.for_each([&](Color u3) {
      for_each_choice(f, 3, m - 1, true, [&](const Edge& e) {
        edges.push_back(e | Edge::singleton(u2) | Edge::singleton(u3));
        ++out.parts.private_pair;
      });
    });
  });
  const std::size_t generated = edges.size();
  out.cover = Cover(p.m - 2, std::move(edges));
  expect(out.cover.size() == generated, "theorem 3 cover parts are disjoint");
  return out;
}

}  // namespace

Cover theorem3_cover(const Theorem3Params& p) { return build_theorem3_cover(p).cover; }

Theorem3CoverParts theorem3_cover_parts(const Theorem3Params& p) {
  return build_theorem3_cover(p).parts;
}

ListFamily theorem1_lift(const ListFamily& base, int copies) {
  const std::size_t m = base.m();
  if (copies < 1) throw InputError("the number of copies must be at least 1");
  if (m < 3 || base.list_size() != static_cast<int>(m) - 2)
    throw InputError("base family must have m lists of size m-2");
  const int size = static_cast<int>(m) - 2;
  const int lifted_m = copies * size + 2;
  const Color span = base.color_count();

  std::vector<Edge> lists(static_cast<std::size_t>(lifted_m));
  for (std::size_t i = 0; i < m; ++i)
    for (int j = 0; j < copies; ++j)
      base[i].for_each([&](Color c) { lists[i].insert(c + static_cast<Color>(j) * span); });
  Color next = span * static_cast<Color>(copies);
  for (std::size_t i = m; i < lists.size(); ++i)
    for (int c = 0; c < lifted_m - 2; ++c) lists[i].insert(next++);
  return ListFamily(std::move(lists), next);
}

Cover theorem1_lift_cover(const Cover& base_quotient_cover, const ListFamily& base, int copies) {
  const ListFamily lifted = theorem1_lift(base, copies);
  Edge fresh_reps;
  for (std::size_t i = base.m(); i < lifted.m(); ++i) fresh_reps.insert(lifted[i].front());
  std::vector<Edge> edges;
  for (const Edge& r : base_quotient_cover.edges()) edges.push_back(r | fresh_reps);
  return Cover(static_cast<int>(lifted.m()) - 2, std::move(edges));
}

std::pair<ListFamily, Hypergraph> trivial_family(int m) {
  if (m < 2) throw InputError("trivial construction needs m >= 2");
  LayoutBuilder b(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) b.block(m, {i});
  ListFamily f = std::move(b).build();
  std::vector<Edge> supports;
  for_each_track_support(f, 0, f.track_count(), [&](const Edge& s) { supports.push_back(s); });
  Hypergraph n_side(f.color_count(), std::move(supports));
  return {std::move(f), std::move(n_side)};
}

std::pair<BigInt, BigInt> hoffman_johnson_range(int m) {
  if (m < 2) throw InputError("Hoffman-Johnson range needs m >= 2");
  return {pow_big(m - 1, m - 1) - pow_big(m - 2, m - 1), pow_big(m, m)};
}

ListFamily family_from_labels(const std::vector<std::vector<long long>>& lists) {
  std::map<long long, Color> ids;
  std::vector<Edge> out;
  for (const auto& list : lists) {
    Edge e;
    for (long long label : list) {
      auto [it, inserted] = ids.try_emplace(label, static_cast<Color>(ids.size()));
      e.insert(it->second);
    }
    out.push_back(e);
  }
  return ListFamily(std::move(out));
}

ListFamily furedi_family() {
  return family_from_labels({{1, 6, 7}, {1, 8, 9}, {2, 8, 7}, {2, 6, 9}, {3, 4, 5}});
}

ListFamily l6_family() {
  return family_from_labels({{1, 3, 5, 13},
                             {1, 4, 6, 14},
                             {2, 3, 7, 15},
                             {2, 4, 8, 16},
                             {5, 6, 7, 8},
                             {9, 10, 11, 12}});
}

ListFamily n4_witness_family() { return family_from_labels({{1, 2}, {3, 4}, {1, 3}, {2, 4}}); }

std::vector<std::vector<int>> membership_signature(const ListFamily& family) {
  std::vector<std::vector<int>> sig;
  family.colors().for_each([&](Color c) {
    std::vector<int> pattern;
    for (std::size_t i = 0; i < family.m(); ++i)
      if (family[i].contains(c)) pattern.push_back(static_cast<int>(i));
    sig.push_back(std::move(pattern));
  });
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace listcover
