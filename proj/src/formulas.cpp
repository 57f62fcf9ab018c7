#include "listcover/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <omp.h>

namespace listcover {

void AlphaVector::validate() const {
  Rational sum = 0;
  for (const Rational& x : a) {
    if (x < 0 || x > 1) throw InputError("alpha components must lie in [0,1]");
    sum += x;
  }
  if (sum != 1) throw InputError("alpha components must sum to 1");
  if (4 * a[3] > 1) throw InputError("4*alpha4 must not exceed 1");
}

Rational theorem2_value(const AlphaVector& alpha) {
  alpha.validate();
  const auto& a = alpha.a;
  return theorem2_polynomial(a[0], a[1], a[2], a[3], a[4]);
}

Rational theorem2_reduced_value(const Rational& a4, const Rational& a5) {
  if (a4 < 0 || a5 < 0 || a4 + a5 > 1 || 4 * a4 > 1)
    throw InputError("reduced domain is a4, a5 >= 0, a4 + a5 <= 1, 4*a4 <= 1");
  return theorem2_reduced_polynomial(a4, a5);
}

namespace {

void check_theorem3(int m, int k, int l) {
  if (m < 6 || k < 2 || l < 0 || k + l > m - 2)
    throw InputError("theorem 3 parameters need m >= 6, k >= 2, l >= 0, k + l <= m-2");
}

}  // namespace

BigInt theorem3_value(int m, int k, int l) {
  check_theorem3(m, k, l);
  const BigInt d = pow_big(m - 2, m - 2 - k) - pow_big(m - 3, m - 2 - k);
  const BigInt quad = BigInt(m - k - 2) * (m - k - 2) + BigInt(l) * l + BigInt(2) * l * k -
                      BigInt(l) * (m - 2);
  return BigInt(k) * pow_big(m - 2, m - 3) + pow_big(m - 2, k - 2) * d * quad;
}

Theorem3Terms theorem3_terms(int m, int k, int l) {
  check_theorem3(m, k, l);
  const BigInt d = pow_big(m - 2, m - 2 - k) - pow_big(m - 3, m - 2 - k);
  const int own = m - 2 - k - l;
  return Theorem3Terms{BigInt(k) * pow_big(m - 2, m - 3), BigInt(l) * d * pow_big(m - 2, k - 1),
                       BigInt(own) * own * d * pow_big(m - 2, k - 2)};
}

int theorem3_optimal_l(int m, int k) {
  if (m < 6 || k < 2 || m - 2 - 2 * k < 0)
    throw InputError("optimal l needs m >= 6, k >= 2 and m-2-2k >= 0");
  const int l = (m - 2 - 2 * k) / 2;
  const BigInt v = theorem3_value(m, k, l);
  if (l > 0 && theorem3_value(m, k, l - 1) < v)
    throw std::logic_error("theorem3_optimal_l: l-1 is better");
  if (k + l + 1 <= m - 2 && theorem3_value(m, k, l + 1) < v)
    throw std::logic_error("theorem3_optimal_l: l+1 is better");
  return l;
}

double theorem3_normalized(int m, int k, int l) {
  return ratio_to_double(theorem3_value(m, k, l), pow_big(m - 2, m - 2));
}

double asymptotic_coefficient() { return 0.75 * (1.0 - 1.0 / std::numbers::e); }

OptimizeMode parse_optimize_mode(std::string_view s) {
  if (s == "full") return OptimizeMode::kFull;
  if (s == "reduced") return OptimizeMode::kReduced;
  throw InputError("unknown optimize mode '" + std::string(s) + "' (expected full|reduced)");
}

std::string_view to_string(OptimizeMode m) { return m == OptimizeMode::kFull ? "full" : "reduced"; }

namespace {

constexpr double kSlack = 1e-12;
constexpr double kInfeasible = std::numeric_limits<double>::infinity();

// Maps the free search coordinates onto the five fractions.
class Parameterization {
 public:
  explicit Parameterization(const OptimizeOptions& o) : mode_(o.mode), fixed_(o.fixed) {
    if (o.grid_step <= 0 || o.tol <= 0) throw InputError("grid step and tolerance must be positive");
    if (mode_ == OptimizeMode::kReduced) {
      free_ = {3, 4};
      return;
    }
    double fixed_sum = 0;
    for (int i = 0; i < 5; ++i) {
      if (fixed_[static_cast<std::size_t>(i)]) {
        fixed_sum += *fixed_[static_cast<std::size_t>(i)];
        continue;
      }
      free_.push_back(i);
    }
    if (free_.empty()) throw InputError("at least one alpha must be free");
    if (fixed_sum > 1 + kSlack) throw InputError("fixed alphas exceed 1");
    dependent_ = free_.back();
    free_.pop_back();
  }

  std::size_t dims() const { return free_.size(); }
  int free_index(std::size_t d) const { return free_[d]; }

  std::array<double, 5> alpha(const std::vector<double>& x) const {
    std::array<double, 5> a{};
    if (mode_ == OptimizeMode::kReduced) {
      a[3] = x[0];
      a[4] = x[1];
      a[0] = a[1] = a[2] = (1 - x[0] - x[1]) / 3;
      return a;
    }
    double sum = 0;
    for (int i = 0; i < 5; ++i)
      if (fixed_[static_cast<std::size_t>(i)]) {
        a[static_cast<std::size_t>(i)] = *fixed_[static_cast<std::size_t>(i)];
        sum += a[static_cast<std::size_t>(i)];
      }
    for (std::size_t d = 0; d < free_.size(); ++d) {
      a[static_cast<std::size_t>(free_[d])] = x[d];
      sum += x[d];
    }
    a[static_cast<std::size_t>(dependent_)] = 1 - sum;
    return a;
  }

  static bool feasible(const std::array<double, 5>& a) {
    for (double v : a)
      if (v < -kSlack || v > 1 + kSlack) return false;
    return 4 * a[3] <= 1 + kSlack;
  }

  double objective(const std::vector<double>& x) const {
    const auto a = alpha(x);
    if (!feasible(a)) return kInfeasible;
    if (mode_ == OptimizeMode::kReduced) return theorem2_reduced_polynomial(x[0], x[1]);
    return theorem2_polynomial(a[0], a[1], a[2], a[3], a[4]);
  }

  // Largest value coordinate d may take given the coordinates before it.
  double upper(std::size_t d, const std::vector<double>& x) const {
    double used = 0;
    for (std::size_t i = 0; i < d; ++i) used += x[i];
    if (mode_ == OptimizeMode::kFull)
      for (const auto& f : fixed_) used += f.value_or(0);
    double up = 1 - used;
    const int idx = mode_ == OptimizeMode::kReduced ? static_cast<int>(d) + 3 : free_[d];
    if (idx == 3) up = std::min(up, 0.25);
    return up;
  }

  OptimizeMode mode() const { return mode_; }

 private:
  OptimizeMode mode_;
  std::array<std::optional<double>, 5> fixed_;
  std::vector<int> free_;
  int dependent_ = -1;
};

struct GridBest {
  double value = kInfeasible;
  std::vector<double> x;
  std::size_t points = 0;
};

// Scans the grid below a fixed first coordinate in lexicographic index order.
void scan_tail(const Parameterization& p, double step, std::vector<double>& x, std::size_t d,
               GridBest& best) {
  if (d == x.size()) {
    ++best.points;
    const double v = p.objective(x);
    if (v < best.value) {
      best.value = v;
      best.x = x;
    }
    return;
  }
  const double up = p.upper(d, x);
  for (long i = 0; i * step <= up + kSlack; ++i) {
    x[d] = std::min(i * step, up);
    scan_tail(p, step, x, d + 1, best);
  }
}

GridBest grid_scan(const Parameterization& p, double step, bool parallel) {
  GridBest best;
  if (p.dims() == 0) {
    best.x = {};
    best.value = p.objective(best.x);
    best.points = 1;
    return best;
  }
  const double up = p.upper(0, std::vector<double>(p.dims(), 0));
  const long outer = static_cast<long>(std::floor((up + kSlack) / step)) + 1;
  std::vector<GridBest> per_outer(static_cast<std::size_t>(outer));
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long i = 0; i < outer; ++i) {
    std::vector<double> x(p.dims(), 0);
    x[0] = std::min(i * step, up);
    scan_tail(p, step, x, 1, per_outer[static_cast<std::size_t>(i)]);
  }
  // Strict improvement in index order keeps the earliest of tied samples.
  for (const GridBest& g : per_outer) {
    best.points += g.points;
    if (g.value < best.value) {
      best.value = g.value;
      best.x = g.x;
    }
  }
  return best;
}

struct Simplex {
  std::vector<double> x;
  double value;
  int iterations;
};

// Nelder-Mead with standard coefficients; infeasible points evaluate to +inf.
Simplex nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                    std::vector<double> start, double step, double tol, int max_iter = 20000) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> pts{start};
  for (std::size_t i = 0; i < n; ++i) {
    auto q = start;
    q[i] += step;
    if (!std::isfinite(f(q))) q[i] = start[i] - step;
    pts.push_back(q);
  }
  std::vector<double> vals;
  for (const auto& q : pts) vals.push_back(f(q));

  int it = 0;
  for (; it < max_iter; ++it) {
    std::vector<std::size_t> order(n + 1);
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    std::vector<std::vector<double>> sp;
    std::vector<double> sv;
    for (auto i : order) {
      sp.push_back(pts[i]);
      sv.push_back(vals[i]);
    }
    pts = std::move(sp);
    vals = std::move(sv);

    double diameter = 0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t d = 0; d < n; ++d) diameter = std::max(diameter, std::abs(pts[i][d] - pts[0][d]));
    if (std::isfinite(vals[n]) && vals[n] - vals[0] <= tol && diameter <= tol) break;

    std::vector<double> centroid(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[i][d] / static_cast<double>(n);
    auto along = [&](double t) {
      std::vector<double> q(n);
      for (std::size_t d = 0; d < n; ++d) q[d] = centroid[d] + t * (pts[n][d] - centroid[d]);
      return q;
    };
    const auto xr = along(-1.0);
    const double fr = f(xr);
    if (fr < vals[0]) {
      const auto xe = along(-2.0);
      const double fe = f(xe);
      if (fe < fr) {
        pts[n] = xe;
        vals[n] = fe;
      } else {
        pts[n] = xr;
        vals[n] = fr;
      }
    } else if (fr < vals[n - 1]) {
      pts[n] = xr;
      vals[n] = fr;
    } else {
      const bool outside = fr < vals[n];
      const auto xc = along(outside ? -0.5 : 0.5);
      const double fc = f(xc);
      if (fc < (outside ? fr : vals[n])) {
        pts[n] = xc;
        vals[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t d = 0; d < n; ++d) pts[i][d] = pts[0][d] + 0.5 * (pts[i][d] - pts[0][d]);
          vals[i] = f(pts[i]);
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (vals[i] < vals[best]) best = i;
  return {pts[best], vals[best], it};
}

Rational to_rational(double x) {
  constexpr long long kDen = 1'000'000'000;
  return make_rational(std::llround(x * static_cast<double>(kDen)), kDen);
}

OptimizeResult optimize_impl(const OptimizeOptions& options, bool parallel) {
  const Parameterization p(options);
  const GridBest grid = grid_scan(p, options.grid_step, parallel);
  if (!std::isfinite(grid.value)) throw InputError("no feasible grid point");

  OptimizeResult r;
  r.grid_value = grid.value;
  r.grid_points = grid.points;
  std::vector<double> x = grid.x;
  double value = grid.value;
  if (p.dims() > 0) {
    auto f = [&](const std::vector<double>& q) { return p.objective(q); };
    // A restart from the converged point guards against a collapsed simplex.
    double step = options.grid_step;
    for (int round = 0; round < 3; ++round) {
      const Simplex s = nelder_mead(f, x, step, options.tol);
      r.refine_iterations += s.iterations;
      if (s.value <= value) {
        x = s.x;
        value = s.value;
      }
      step = std::max(options.tol * 10, step * 0.1);
    }
  }
  r.value = value;
  r.alpha = p.alpha(x);

  // Exact re-evaluation at a rounded rational point with the same constraints.
  AlphaVector exact;
  if (p.mode() == OptimizeMode::kReduced) {
    const Rational a4 = std::max(Rational(0), to_rational(x[0]));
    const Rational a5 = std::max(Rational(0), to_rational(x[1]));
    const Rational rest = (1 - a4 - a5) / 3;
    exact.a = {rest, rest, rest, a4, a5};
    r.exact_value = theorem2_reduced_value(a4, a5);
  } else {
    Rational sum = 0;
    int dependent = -1;
    for (int i = 0; i < 5; ++i) {
      const bool pinned = options.fixed[static_cast<std::size_t>(i)].has_value();
      bool is_free = false;
      for (std::size_t d = 0; d < p.dims(); ++d) is_free = is_free || p.free_index(d) == i;
      if (!pinned && !is_free) {
        dependent = i;
        continue;
      }
      auto& slot = exact.a[static_cast<std::size_t>(i)];
      slot = std::max(Rational(0), to_rational(r.alpha[static_cast<std::size_t>(i)]));
      sum += slot;
    }
    exact.a[static_cast<std::size_t>(dependent)] = 1 - sum;
    if (sum > 1) {
      // Rounding pushed the dependent fraction below zero; take the excess
      // from the largest free fraction instead.
      std::size_t largest = 0;
      for (std::size_t d = 0; d < p.dims(); ++d)
        if (exact.a[static_cast<std::size_t>(p.free_index(d))] > exact.a[largest])
          largest = static_cast<std::size_t>(p.free_index(d));
      exact.a[largest] -= sum - 1;
      exact.a[static_cast<std::size_t>(dependent)] = 0;
    }
    r.exact_value = theorem2_value(exact);
  }
  exact.validate();
  r.exact_alpha = exact;
  return r;
}

}  // namespace

OptimizeResult optimize_theorem2(const OptimizeOptions& options) { return optimize_impl(options, true); }

OptimizeResult serial::optimize_theorem2(const OptimizeOptions& options) {
  return optimize_impl(options, false);
}

}  // namespace listcover
