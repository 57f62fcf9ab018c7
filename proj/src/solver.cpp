#include "listcover/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>

#include <omp.h>

namespace listcover {

std::string_view to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::kExact: return "exact";
    case SolveMethod::kGreedy: return "greedy";
    case SolveMethod::kOracle: return "oracle";
  }
  return "exact";
}

SolveMethod parse_solve_method(std::string_view s) {
  if (s == "exact") return SolveMethod::kExact;
  if (s == "greedy") return SolveMethod::kGreedy;
  if (s == "oracle") return SolveMethod::kOracle;
  throw InputError("unknown method '" + std::string(s) + "' (expected exact|greedy|oracle)");
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::uint64_t kNoBound = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InputError("edge weight product overflows 64 bits");
  return r;
}

std::uint64_t edge_cost(const Edge& e, const Weights& w) {
  std::uint64_t p = 1;
  e.for_each([&](Color c) {
    if (c >= w.size() || w[c] == 0)
      throw InputError("color " + std::to_string(c) + " has no positive weight");
    p = checked_mul(p, w[c]);
  });
  return p;
}

// Fixed-width dynamic bit set.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  std::size_t count_and_not(const Bits& mask) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(w_[i] & ~mask.w_[i]));
    return c;
  }
  bool all() const { return count() == n_; }
  bool operator==(const Bits&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Reduced set-cover instance: targets are rows, candidate edges are columns.
struct Instance {
  std::vector<Edge> cand;
  std::vector<std::uint64_t> cost;
  std::vector<Bits> cand_cov;                  // over targets
  std::vector<std::vector<int>> target_cands;  // sorted by (cost, candidate order)
  std::size_t targets = 0;
};

Instance build_instance(const std::vector<Edge>& targets, const std::vector<Edge>& cands,
                        const Weights& w) {
  // Target-by-candidate incidence, then dominance reductions to a fixpoint.
  std::vector<Edge> ts = targets;
  std::vector<Edge> cs = cands;
  std::vector<std::uint64_t> cost(cs.size());
  for (std::size_t j = 0; j < cs.size(); ++j) cost[j] = edge_cost(cs[j], w);

  for (bool changed = true; changed;) {
    changed = false;
    const std::size_t nt = ts.size(), nc = cs.size();
    std::vector<Bits> row(nt, Bits(nc)), col(nc, Bits(nt));
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        if (cs[j].subset_of(ts[i])) {
          row[i].set(j);
          col[j].set(i);
        }

    // A target whose candidates include all candidates of another target is
    // covered whenever that one is.
    std::vector<char> drop_t(nt, 0);
    for (std::size_t a = 0; a < nt; ++a)
      for (std::size_t b = 0; b < nt && !drop_t[a]; ++b)
        if (a != b && !drop_t[b] && row[b].subset_of(row[a]) && (row[a] != row[b] || b < a))
          drop_t[a] = 1;

    std::vector<char> drop_c(nc, 0);
    for (std::size_t a = 0; a < nc; ++a) {
      if (col[a].count() == 0) {
        drop_c[a] = 1;
        continue;
      }
      for (std::size_t b = 0; b < nc && !drop_c[a]; ++b) {
        if (a == b || drop_c[b] || !col[a].subset_of(col[b]) || cost[b] > cost[a]) continue;
        const bool same = col[a] == col[b] && cost[a] == cost[b];
        if (!same || b < a) drop_c[a] = 1;
      }
    }
    std::vector<Edge> nts, ncs;
    std::vector<std::uint64_t> ncost;
    for (std::size_t i = 0; i < nt; ++i)
      if (!drop_t[i]) nts.push_back(ts[i]);
    for (std::size_t j = 0; j < nc; ++j)
      if (!drop_c[j]) {
        ncs.push_back(cs[j]);
        ncost.push_back(cost[j]);
      }
    changed = nts.size() != nt || ncs.size() != nc;
    ts = std::move(nts);
    cs = std::move(ncs);
    cost = std::move(ncost);
  }

  Instance inst;
  inst.targets = ts.size();
  inst.cand = std::move(cs);
  inst.cost = std::move(cost);
  inst.cand_cov.assign(inst.cand.size(), Bits(inst.targets));
  inst.target_cands.resize(inst.targets);
  for (std::size_t i = 0; i < inst.targets; ++i)
    for (std::size_t j = 0; j < inst.cand.size(); ++j)
      if (inst.cand[j].subset_of(ts[i])) {
        inst.cand_cov[j].set(i);
        inst.target_cands[i].push_back(static_cast<int>(j));
      }
  for (auto& tc : inst.target_cands)
    std::stable_sort(tc.begin(), tc.end(),
                     [&](int a, int b) { return inst.cost[static_cast<std::size_t>(a)] <
                                                inst.cost[static_cast<std::size_t>(b)]; });
  return inst;
}

// Greedy cost-per-newly-covered-target cover, used as the first incumbent.
std::pair<std::uint64_t, std::vector<int>> greedy_upper_bound(const Instance& inst) {
  Bits covered(inst.targets);
  std::vector<int> chosen;
  std::uint64_t total = 0;
  while (!covered.all()) {
    int best = -1;
    double best_ratio = 0;
    for (std::size_t j = 0; j < inst.cand.size(); ++j) {
      const std::size_t gain = inst.cand_cov[j].count_and_not(covered);
      if (gain == 0) continue;
      const double ratio = static_cast<double>(inst.cost[j]) / static_cast<double>(gain);
      if (best < 0 || ratio < best_ratio) {
        best = static_cast<int>(j);
        best_ratio = ratio;
      }
    }
    chosen.push_back(best);
    covered |= inst.cand_cov[static_cast<std::size_t>(best)];
    total += inst.cost[static_cast<std::size_t>(best)];
  }
  return {total, chosen};
}

struct Node {
  Bits covered;
  Bits excluded;
  std::uint64_t cost = 0;
  std::vector<int> chosen;
};

class Search {
 public:
  Search(const Instance& inst, std::atomic<std::uint64_t>& best, Clock::time_point deadline,
         bool has_deadline)
      : inst_(inst), best_(best), deadline_(deadline), has_deadline_(has_deadline) {}

  // Explores the subtree rooted at `node`. With `first_at` set, stops at the
  // first complete cover of exactly that cost.
  void run(Node node, std::optional<std::uint64_t> first_at = std::nullopt) {
    first_at_ = first_at;
    node_ = std::move(node);
    dfs();
  }

  // Expands the tree breadth-first until at least `want` open nodes exist.
  std::vector<Node> split(Node root, std::size_t want) {
    std::vector<Node> frontier{std::move(root)};
    for (int depth = 0; depth < 3 && frontier.size() < want; ++depth) {
      std::vector<Node> next;
      for (Node& n : frontier) {
        if (n.covered.all()) {
          next.push_back(std::move(n));
          continue;
        }
        node_ = n;
        const int t = select_target();
        if (t < 0) continue;
        for (int c : inst_.target_cands[static_cast<std::size_t>(t)]) {
          const auto uc = static_cast<std::size_t>(c);
          if (node_.excluded.test(uc)) continue;
          Node child = node_;
          child.covered |= inst_.cand_cov[uc];
          child.cost += inst_.cost[uc];
          child.chosen.push_back(c);
          next.push_back(std::move(child));
          node_.excluded.set(uc);
        }
      }
      frontier = std::move(next);
    }
    return frontier;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool timed_out() const { return timed_out_; }
  bool found() const { return found_; }
  const std::vector<int>& solution() const { return solution_; }
  std::uint64_t solution_cost() const { return solution_cost_; }

 private:
  // Uncovered target with the fewest live candidates; -1 if some target has
  // none left (infeasible), -2 if all are covered.
  int select_target() const {
    int best_t = -2;
    std::size_t best_live = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < inst_.targets; ++i) {
      if (node_.covered.test(i)) continue;
      std::size_t live = 0;
      for (int c : inst_.target_cands[i])
        if (!node_.excluded.test(static_cast<std::size_t>(c))) ++live;
      if (live == 0) return -1;
      if (live < best_live) {
        best_live = live;
        best_t = static_cast<int>(i);
      }
    }
    return best_t;
  }

  std::uint64_t bound() const {
    return first_at_ ? *first_at_ + 1 : best_.load(std::memory_order_relaxed);
  }

  // Max of two bounds on the remaining cost: a packing of targets whose live
  // candidate sets are pairwise disjoint, and the fractional bound where each
  // uncovered target pays its cheapest cost share cost(c)/uncovered(c).
  std::uint64_t lower_bound() const {
    Bits used(inst_.cand.size());
    std::uint64_t packing = 0;
    double fractional = 0;
    std::vector<std::size_t> gain(inst_.cand.size(), 0);
    for (std::size_t j = 0; j < inst_.cand.size(); ++j)
      if (!node_.excluded.test(j)) gain[j] = inst_.cand_cov[j].count_and_not(node_.covered);
    for (std::size_t i = 0; i < inst_.targets; ++i) {
      if (node_.covered.test(i)) continue;
      bool disjoint = true;
      std::uint64_t cheapest = kNoBound;
      double share = std::numeric_limits<double>::infinity();
      for (int c : inst_.target_cands[i]) {
        const auto uc = static_cast<std::size_t>(c);
        if (node_.excluded.test(uc)) continue;
        if (used.test(uc)) disjoint = false;
        cheapest = std::min(cheapest, inst_.cost[uc]);
        share = std::min(share, static_cast<double>(inst_.cost[uc]) / static_cast<double>(gain[uc]));
      }
      fractional += share;
      if (disjoint && cheapest != kNoBound) {
        packing += cheapest;
        for (int c : inst_.target_cands[i]) used.set(static_cast<std::size_t>(c));
      }
    }
    const auto frac = static_cast<std::uint64_t>(std::ceil(fractional - 1e-7));
    return std::max(packing, frac);
  }

  void dfs() {
    if (stop_) return;
    ++nodes_;
    if (has_deadline_ && (nodes_ & 1023) == 0 && Clock::now() > deadline_) {
      timed_out_ = stop_ = true;
      return;
    }
    const int t = select_target();
    if (t == -2) {
      record();
      return;
    }
    if (t == -1) return;
    if (node_.cost + lower_bound() >= bound()) return;

    std::vector<std::size_t> excluded_here;
    for (int c : inst_.target_cands[static_cast<std::size_t>(t)]) {
      const auto uc = static_cast<std::size_t>(c);
      if (node_.excluded.test(uc)) continue;
      if (node_.cost + inst_.cost[uc] >= bound()) break;  // sorted by cost
      const Bits saved = node_.covered;
      node_.covered |= inst_.cand_cov[uc];
      node_.cost += inst_.cost[uc];
      node_.chosen.push_back(c);
      dfs();
      node_.chosen.pop_back();
      node_.cost -= inst_.cost[uc];
      node_.covered = saved;
      if (stop_) break;
      node_.excluded.set(uc);
      excluded_here.push_back(uc);
    }
    for (std::size_t uc : excluded_here) node_.excluded.reset(uc);
  }

  void record() {
    if (first_at_) {
      if (node_.cost == *first_at_) {
        solution_ = node_.chosen;
        solution_cost_ = node_.cost;
        found_ = stop_ = true;
      }
      return;
    }
    std::uint64_t cur = best_.load();
    while (node_.cost < cur && !best_.compare_exchange_weak(cur, node_.cost)) {
    }
    if (node_.cost < cur) {
      solution_ = node_.chosen;
      solution_cost_ = node_.cost;
      found_ = true;
    }
  }

  const Instance& inst_;
  std::atomic<std::uint64_t>& best_;
  Clock::time_point deadline_;
  bool has_deadline_;
  std::optional<std::uint64_t> first_at_;
  Node node_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  bool timed_out_ = false;
  bool found_ = false;
  std::vector<int> solution_;
  std::uint64_t solution_cost_ = 0;
};

Cover to_cover(const Instance& inst, const std::vector<int>& chosen, int k) {
  std::vector<Edge> edges;
  for (int c : chosen) edges.push_back(inst.cand[static_cast<std::size_t>(c)]);
  return Cover(k, std::move(edges));
}

// Shared trivial cases. Returns a finished report, or nullopt to continue.
std::optional<SolveReport> trivial_report(const Hypergraph& targets, int k, SolveMethod method,
                                          CandidateSet& cands) {
  if (k < 0) throw InputError("k must be non-negative");
  cands = candidate_edges(targets, k);
  SolveReport r;
  r.method = method;
  if (cands.uncoverable) return r;
  if (targets.empty()) {
    r.value = CoverValue::finite(0);
    r.cover = Cover(k, {});
    return r;
  }
  return std::nullopt;
}

SolveReport solve_exact_impl(const Hypergraph& raw_targets, const Weights& weights, int k,
                             const ExactOptions& options) {
  const auto start = Clock::now();
  const Hypergraph targets = minimal_edges(raw_targets);
  CandidateSet cands;
  if (auto r = trivial_report(targets, k, SolveMethod::kExact, cands)) return *r;

  const Instance inst = build_instance(targets.edges(), cands.edges, weights);
  auto [ub, ub_sol] = greedy_upper_bound(inst);
  std::atomic<std::uint64_t> best{ub + 1};
  const bool has_deadline = options.timeout.count() > 0;
  const auto deadline = start + options.timeout;

  Node root{Bits(inst.targets), Bits(inst.cand.size()), 0, {}};
  std::uint64_t nodes = 0;
  bool timed_out = false;
  std::vector<int> incumbent = ub_sol;
  std::uint64_t incumbent_cost = ub;
  std::mutex mu;

  auto take = [&](const Search& s) {
    std::lock_guard lock(mu);
    nodes += s.nodes();
    timed_out = timed_out || s.timed_out();
    if (s.found() && s.solution_cost() < incumbent_cost) {
      incumbent = s.solution();
      incumbent_cost = s.solution_cost();
    }
  };

  const int threads = options.parallel ? omp_get_max_threads() : 1;
  if (threads > 1) {
    Search splitter(inst, best, deadline, has_deadline);
    std::vector<Node> work = splitter.split(root, static_cast<std::size_t>(threads) * 8);
    const auto n = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      Search s(inst, best, deadline, has_deadline);
      s.run(work[static_cast<std::size_t>(i)]);
      take(s);
    }
  } else {
    Search s(inst, best, deadline, has_deadline);
    s.run(root);
    take(s);
  }

  SolveReport r;
  r.method = SolveMethod::kExact;
  r.optimal = !timed_out;
  std::vector<int> chosen = incumbent;
  if (!timed_out) {
    // Canonical pass: the first cover of the optimal cost in serial order.
    std::atomic<std::uint64_t> unused{kNoBound};
    Search canon(inst, unused, deadline, false);
    canon.run(root, incumbent_cost);
    nodes += canon.nodes();
    if (!canon.found()) throw VerificationError("canonical pass lost the optimal cover");
    chosen = canon.solution();
  }
  Cover cover = to_cover(inst, chosen, k);
  if (timed_out) cover = prune_redundant_edges(cover, targets, weights);
  if (!verify_cover(cover, targets)) throw VerificationError("solver produced an invalid cover");
  r.value = CoverValue::finite(weighted_value(cover, weights));
  r.cover = std::move(cover);
  r.nodes_explored = nodes;
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return r;
}

}  // namespace

SolveReport solve_exact_min_weighted_cover(const Hypergraph& targets, const Weights& weights,
                                           int k, const ExactOptions& options) {
  return solve_exact_impl(targets, weights, k, options);
}

SolveReport serial::solve_exact_min_weighted_cover(const Hypergraph& targets,
                                                   const Weights& weights, int k) {
  return solve_exact_impl(targets, weights, k, ExactOptions{std::chrono::milliseconds{0}, false});
}

SolveReport brute_force_min_cover(const Hypergraph& targets, const Weights& weights, int k,
                                  std::size_t cap) {
  const auto start = Clock::now();
  CandidateSet cands;
  if (auto r = trivial_report(targets, k, SolveMethod::kOracle, cands)) return *r;
  const std::size_t n = cands.edges.size();
  if (n > cap || n > 63)
    throw InputError("oracle refuses " + std::to_string(n) + " candidate edges (cap " +
                     std::to_string(cap) + ")");

  std::vector<std::uint64_t> cost(n);
  for (std::size_t j = 0; j < n; ++j) cost[j] = edge_cost(cands.edges[j], weights);
  std::vector<std::uint64_t> target_mask;
  for (const Edge& t : targets.edges()) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (cands.edges[j].subset_of(t)) mask |= std::uint64_t{1} << j;
    target_mask.push_back(mask);
  }

  // Ties go to the lexicographically smallest sequence of candidate indices.
  auto lex_less = [](std::uint64_t a, std::uint64_t b) {
    while (a && b) {
      const int ia = std::countr_zero(a), ib = std::countr_zero(b);
      if (ia != ib) return ia < ib;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  };

  std::uint64_t best_mask = 0, best_cost = kNoBound, visited = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    ++visited;
    bool ok = true;
    for (std::uint64_t tm : target_mask)
      if ((tm & mask) == 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::uint64_t c = 0;
    for (std::uint64_t b = mask; b; b &= b - 1) c += cost[static_cast<std::size_t>(std::countr_zero(b))];
    if (c < best_cost || (c == best_cost && lex_less(mask, best_mask))) {
      best_cost = c;
      best_mask = mask;
    }
  }

  std::vector<Edge> edges;
  for (std::uint64_t b = best_mask; b; b &= b - 1)
    edges.push_back(cands.edges[static_cast<std::size_t>(std::countr_zero(b))]);
  SolveReport r;
  r.method = SolveMethod::kOracle;
  r.cover = Cover(k, std::move(edges));
  r.value = CoverValue::finite(BigInt(best_cost));
  r.nodes_explored = visited;
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return r;
}

Cover prune_redundant_edges(const Cover& cover, const Hypergraph& targets, const Weights& weights) {
  std::vector<Edge> edges = cover.edges();
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> cost(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) cost[i] = edge_cost(edges[i], weights);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cost[a] != cost[b]) return cost[a] > cost[b];
    return edges[b] < edges[a];
  });
  std::vector<int> inside(targets.size(), 0);
  for (std::size_t t = 0; t < targets.size(); ++t)
    for (const Edge& e : edges)
      if (e.subset_of(targets.edges()[t])) ++inside[t];
  std::vector<char> keep(edges.size(), 1);
  for (std::size_t i : order) {
    bool needed = false;
    for (std::size_t t = 0; t < targets.size() && !needed; ++t)
      if (edges[i].subset_of(targets.edges()[t]) && inside[t] == 1) needed = true;
    if (needed) continue;
    keep[i] = 0;
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (edges[i].subset_of(targets.edges()[t])) --inside[t];
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (keep[i]) out.push_back(edges[i]);
  return Cover(cover.k(), std::move(out));
}

GreedyCover greedy_track_peel_cover(const WeightedFamily& wf) {
  const ListFamily& fam = wf.family;
  const std::size_t m = fam.m();
  if (m < 3) throw InputError("track peeling needs at least three lists");
  const int k = static_cast<int>(m) - 2;

  std::vector<std::vector<Color>> members(m);
  for (std::size_t i = 0; i < m; ++i) members[i] = fam[i].members();
  auto support = [&](std::uint64_t idx, std::size_t len) {
    Edge s;
    for (std::size_t i = len; i-- > 0;) {
      s.insert(members[i][idx % members[i].size()]);
      idx /= members[i].size();
    }
    return s;
  };

  std::vector<std::uint64_t> alive(fam.track_count());
  std::iota(alive.begin(), alive.end(), 0);
  std::vector<Edge> edges;
  for (std::size_t len = m; !alive.empty(); --len) {
    if (len == 0) throw InputError("structure outside greedy domain: tracks never resolved");
    std::vector<Edge> supports;
    supports.reserve(alive.size());
    for (std::uint64_t idx : alive) {
      const Edge s = support(idx, len);
      if (s.size() < k)
        throw InputError("structure outside greedy domain: a track support has " +
                         std::to_string(s.size()) + " < " + std::to_string(k) + " colors");
      if (s.size() == k) edges.push_back(s);
      supports.push_back(s);
    }
    canonicalize(edges);
    // Every track covered by a harvested edge is done; the rest lose their
    // last coordinate.
    std::vector<std::uint64_t> survivors;
    for (std::size_t t = 0; t < alive.size(); ++t) {
      const bool covered = std::any_of(edges.begin(), edges.end(),
                                       [&](const Edge& e) { return e.subset_of(supports[t]); });
      if (!covered) survivors.push_back(alive[t] / members[len - 1].size());
    }
    std::sort(survivors.begin(), survivors.end());
    survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
    alive = std::move(survivors);
  }
  GreedyCover out;
  out.cover = Cover(k, std::move(edges));
  out.value = CoverValue::finite(weighted_value(out.cover, wf));
  return out;
}

}  // namespace listcover
