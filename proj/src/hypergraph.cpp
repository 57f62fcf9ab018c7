#include "listcover/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

#include <omp.h>

namespace listcover {

std::string Edge::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Color c) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  });
  return out + "}";
}

std::vector<Edge> k_subsets(const Edge& e, int k) {
  std::vector<Edge> out;
  const std::vector<Color> mem = e.members();
  const int n = static_cast<int>(mem.size());
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    Edge s;
    for (int i : idx) s.insert(mem[static_cast<std::size_t>(i)]);
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

ListFamily::ListFamily(std::vector<Edge> lists, std::optional<Color> color_count)
    : lists_(std::move(lists)) {
  Color bound = 0;
  for (const Edge& l : lists_) {
    if (l.empty()) throw InputError("color lists must be non-empty");
    bound = std::max(bound, l.end_bound());
  }
  if (color_count && *color_count < bound)
    throw InputError("color_count is smaller than the largest color id in the family");
  color_count_ = color_count.value_or(bound);
}

ListFamily::ListFamily(std::initializer_list<std::initializer_list<Color>> lists)
    : ListFamily([&] {
        std::vector<Edge> v;
        for (auto l : lists) v.push_back(Edge(l));
        return v;
      }()) {}

Edge ListFamily::colors() const {
  Edge all;
  for (const Edge& l : lists_) all |= l;
  return all;
}

std::optional<int> ListFamily::list_size() const {
  if (lists_.empty()) return std::nullopt;
  const int s = lists_.front().size();
  for (const Edge& l : lists_)
    if (l.size() != s) return std::nullopt;
  return s;
}

bool ListFamily::is_dense() const { return colors().size() == static_cast<int>(color_count_); }

std::uint64_t ListFamily::track_count() const {
  std::uint64_t n = lists_.empty() ? 0 : 1;
  for (const Edge& l : lists_) {
    const auto s = static_cast<std::uint64_t>(l.size());
    if (n > UINT64_MAX / s) throw InputError("track count overflows 64 bits");
    n *= s;
  }
  return n;
}

void check_track(const Track& track, const ListFamily& family) {
  if (track.size() != family.m()) throw InputError("track length differs from the list count");
  for (std::size_t i = 0; i < track.size(); ++i)
    if (!family[i].contains(track[i]))
      throw InputError("track coordinate " + std::to_string(i) + " is not in its list");
}

void canonicalize(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Hypergraph::Hypergraph(Color vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const Edge& e : edges_)
    if (e.end_bound() > vertex_count_)
      throw InputError("edge " + e.to_string() + " exceeds vertex_count " +
                       std::to_string(vertex_count_));
  canonicalize(edges_);
}

bool Hypergraph::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool is_transversal(const Edge& candidate, const ListFamily& family) {
  if (candidate.end_bound() > family.color_count())
    throw InputError("candidate " + candidate.to_string() + " uses a color outside the family");
  return std::all_of(family.lists().begin(), family.lists().end(),
                     [&](const Edge& l) { return candidate.intersects(l); });
}

Edge track_support(const Track& track) {
  Edge e;
  for (Color c : track) e.insert(c);
  return e;
}

namespace {

bool by_size_then_lex(const Edge& a, const Edge& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Edges of `sorted` (by size, then lex, no duplicates) split into equal-size runs.
template <class KeepFn>
std::vector<Edge> filter_layers(const std::vector<Edge>& sorted, KeepFn&& process_layer) {
  std::vector<Edge> kept;
  std::size_t begin = 0;
  while (begin < sorted.size()) {
    std::size_t end = begin;
    while (end < sorted.size() && sorted[end].size() == sorted[begin].size()) ++end;
    process_layer(kept, begin, end);
    begin = end;
  }
  return kept;
}

bool has_subset_in(const Edge& e, const std::vector<Edge>& kept, std::size_t kept_end) {
  for (std::size_t i = 0; i < kept_end; ++i)
    if (kept[i].subset_of(e)) return true;
  return false;
}

}  // namespace

namespace serial {

Hypergraph minimal_edges(const Hypergraph& h) {
  std::vector<Edge> sorted = h.edges();
  std::sort(sorted.begin(), sorted.end(), by_size_then_lex);
  std::vector<Edge> kept;
  for (const Edge& e : sorted)
    if (!has_subset_in(e, kept, kept.size())) kept.push_back(e);
  return Hypergraph(h.vertex_count(), std::move(kept));
}

Hypergraph enumerate_minimal_transversals(const ListFamily& family) {
  if (family.m() == 0) throw InputError("family must contain at least one list");
  std::unordered_set<Edge, EdgeHash> supports;
  for_each_track_support(family, 0, family.track_count(),
                         [&](const Edge& s) { supports.insert(s); });
  return serial::minimal_edges(
      Hypergraph(family.color_count(), std::vector<Edge>(supports.begin(), supports.end())));
}

}  // namespace serial

Hypergraph minimal_edges(const Hypergraph& h) {
  std::vector<Edge> sorted = h.edges();
  std::sort(sorted.begin(), sorted.end(), by_size_then_lex);
  std::vector<char> keep(sorted.size(), 0);
  std::vector<Edge> kept = filter_layers(sorted, [&](std::vector<Edge>& acc, std::size_t b,
                                                     std::size_t e) {
    const std::size_t frozen = acc.size();
    // Equal-size edges cannot contain one another, so a layer only checks
    // against the smaller minimal edges accepted before it.
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(b); i < static_cast<std::ptrdiff_t>(e); ++i)
      keep[static_cast<std::size_t>(i)] =
          has_subset_in(sorted[static_cast<std::size_t>(i)], acc, frozen) ? 0 : 1;
    for (std::size_t i = b; i < e; ++i)
      if (keep[i]) acc.push_back(sorted[i]);
  });
  return Hypergraph(h.vertex_count(), std::move(kept));
}

Hypergraph enumerate_minimal_transversals(const ListFamily& family) {
  if (family.m() == 0) throw InputError("family must contain at least one list");
  const std::uint64_t total = family.track_count();
  const int threads = omp_get_max_threads();
  std::vector<std::vector<Edge>> partial(static_cast<std::size_t>(threads));

#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
    const int nt = omp_get_num_threads();
    using Wide = unsigned __int128;
    const auto first = static_cast<std::uint64_t>(Wide{total} * static_cast<Wide>(t) / static_cast<Wide>(nt));
    const auto last = static_cast<std::uint64_t>(Wide{total} * static_cast<Wide>(t + 1) / static_cast<Wide>(nt));
    std::unordered_set<Edge, EdgeHash> local;
    for_each_track_support(family, first, last, [&](const Edge& s) { local.insert(s); });
    partial[static_cast<std::size_t>(t)].assign(local.begin(), local.end());
  }

  std::vector<Edge> supports;
  for (auto& p : partial) supports.insert(supports.end(), p.begin(), p.end());
  return minimal_edges(Hypergraph(family.color_count(), std::move(supports)));
}

}  // namespace listcover
