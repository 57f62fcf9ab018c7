#include "listcover/choosability.hpp"

#include <algorithm>
#include <atomic>

#include "listcover/cover.hpp"

namespace listcover {

namespace {

constexpr std::uint64_t kBlock = 4096;

bool blocks_every_n_vertex(const Edge& support, const ListFamily& n_lists) {
  return std::none_of(n_lists.lists().begin(), n_lists.lists().end(),
                      [&](const Edge& l) { return l.subset_of(support); });
}

Coloring coloring_for_track(const Assignment& a, std::uint64_t index) {
  const ListFamily& ms = a.m_lists;
  Coloring out;
  out.m_side.resize(ms.m());
  for (std::size_t i = ms.m(); i-- > 0;) {
    const auto mem = ms[i].members();
    out.m_side[i] = mem[index % mem.size()];
    index /= mem.size();
  }
  const Edge used = track_support(out.m_side);
  for (const Edge& l : a.n_lists.lists()) out.n_side.push_back((l - used).front());
  return out;
}

void check_assignment(const Assignment& a) {
  if (a.m_lists.m() == 0) throw InputError("the M side needs at least one list");
}

}  // namespace

std::optional<Coloring> serial::find_proper_coloring(const Assignment& a) {
  check_assignment(a);
  std::optional<std::uint64_t> hit;
  std::uint64_t idx = 0;
  const std::uint64_t total = a.m_lists.track_count();
  // for_each_track_support has no early exit; walk in blocks instead.
  for (std::uint64_t first = 0; first < total && !hit; first += kBlock) {
    idx = first;
    for_each_track_support(a.m_lists, first, std::min(total, first + kBlock), [&](const Edge& s) {
      if (!hit && blocks_every_n_vertex(s, a.n_lists)) hit = idx;
      ++idx;
    });
  }
  if (!hit) return std::nullopt;
  return coloring_for_track(a, *hit);
}

std::optional<Coloring> find_proper_coloring(const Assignment& a) {
  check_assignment(a);
  const std::uint64_t total = a.m_lists.track_count();
  const auto blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
  std::atomic<std::uint64_t> first_hit{total};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t first = static_cast<std::uint64_t>(b) * kBlock;
    if (first >= first_hit.load(std::memory_order_relaxed)) continue;
    std::uint64_t idx = first;
    bool found = false;
    for_each_track_support(a.m_lists, first, std::min(total, first + kBlock), [&](const Edge& s) {
      if (!found && blocks_every_n_vertex(s, a.n_lists)) {
        found = true;
        std::uint64_t cur = first_hit.load();
        while (idx < cur && !first_hit.compare_exchange_weak(cur, idx)) {
        }
      }
      ++idx;
    });
  }
  if (first_hit.load() == total) return std::nullopt;
  return coloring_for_track(a, first_hit.load());
}

bool is_bad_assignment_via_transversals(const Assignment& a) {
  check_assignment(a);
  const Hypergraph targets = enumerate_minimal_transversals(a.m_lists);
  return std::all_of(targets.edges().begin(), targets.edges().end(), [&](const Edge& t) {
    return std::any_of(a.n_lists.lists().begin(), a.n_lists.lists().end(),
                       [&](const Edge& l) { return l.subset_of(t); });
  });
}

WitnessReport verify_witness(const Assignment& a) {
  check_assignment(a);
  const auto ms = a.m_lists.list_size();
  const auto ns = a.n_lists.list_size();
  if (!ms || (a.n_lists.m() > 0 && ns != ms))
    throw InputError("all M and N lists must share one size");
  WitnessReport r;
  r.m = a.m_lists.m();
  r.n = a.n_lists.m();
  r.list_size = *ms;
  const bool no_coloring = !find_proper_coloring(a).has_value();
  r.bad = is_bad_assignment_via_transversals(a);
  r.method_agreement = no_coloring == r.bad;
  if (r.bad && r.method_agreement)
    r.implied_bound = "ch(K_{" + std::to_string(r.m) + "," + std::to_string(r.n) + "}) >= " +
                      std::to_string(r.list_size + 1);
  return r;
}

bool witness_is_minimal(const Assignment& a) {
  for (std::size_t drop = 0; drop < a.n_lists.m(); ++drop) {
    std::vector<Edge> rest;
    for (std::size_t i = 0; i < a.n_lists.m(); ++i)
      if (i != drop) rest.push_back(a.n_lists[i]);
    const Assignment smaller{a.m_lists, ListFamily(std::move(rest), a.n_lists.color_count())};
    if (!find_proper_coloring(smaller)) return false;
  }
  return true;
}

}  // namespace listcover
