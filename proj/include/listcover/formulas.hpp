#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "listcover/cover.hpp"
#include "listcover/numeric.hpp"

namespace listcover {

/// Fractions alpha_i = k_i / (m-2) of the Theorem 2 structure.
struct AlphaVector {
  std::array<Rational, 5> a;

  /// Throws InputError unless every a_i is in [0,1], they sum to 1 and 4*a4 <= 1.
  void validate() const;
};

/// Normalized value (cover value over (m-2)^(m-2)) of the track-peeling cover
/// of the Theorem 2 structure. Generic so the optimizer can run it on doubles.
template <class T>
T theorem2_polynomial(const T& a1, const T& a2, const T& a3, const T& a4, const T& a5) {
  const T s1 = a1 + a2 + a3;
  const T s2 = a1 * a2 + a1 * a3 + a2 * a3;
  const T a5sq = a5 * a5;
  const T a5_4 = a5sq * a5sq;
  const T a45 = a4 + a5;
  const T a45_4 = (a45 * a45) * (a45 * a45);
  return a1 * a1 + a2 * a2 + a3 * a3 + T(2) * (a4 * a4 + T(2) * a4 * a5 + (T(1) - T(2) * a4) * a5sq) * s1 +
         T(4) * (a4 + a5 * (T(1) - T(3) * a4)) * s2 + T(4) * a1 * a2 * a3 * (T(1) - T(3) * a4) +
         (a45_4 - a5_4) + a5_4 * (T(1) - T(4) * a4);
}

/// theorem2_polynomial on the slice a1 = a2 = a3 = (1 - a4 - a5)/3, expanded.
template <class T>
T theorem2_reduced_polynomial(const T& a4, const T& a5) {
  auto q = [](int n, int d) { return T(n) / T(d); };
  const T a4_2 = a4 * a4, a4_3 = a4_2 * a4, a4_4 = a4_2 * a4_2;
  const T a5_2 = a5 * a5, a5_3 = a5_2 * a5, a5_4 = a5_2 * a5_2;
  return q(13, 27) - q(6, 27) * a4 + q(13, 9) * a4_2 - q(58, 27) * a4_3 + q(13, 9) * a4_4 +
         a5 * (q(2, 9) - q(22, 9) * a4 + q(26, 9) * a4_2 + q(4, 3) * a4_3) +
         a5_2 * (q(1, 9) + q(2, 9) * a4 + q(10, 3) * a4_2) + a5_3 * (q(-22, 27) + q(40, 9) * a4) +
         a5_4 * (T(1) - T(4) * a4);
}

Rational theorem2_value(const AlphaVector& alpha);

/// Throws InputError unless a4, a5 >= 0, a4 + a5 <= 1 and 4*a4 <= 1.
Rational theorem2_reduced_value(const Rational& a4, const Rational& a5);

/// k(m-2)^(m-3) + (m-2)^(k-2) [(m-2)^(m-2-k) - (m-3)^(m-2-k)] ((m-k-2)^2 + l^2 + 2lk - l(m-2)).
BigInt theorem3_value(int m, int k, int l);

/// The three part sizes of theorem3_value, evaluated separately.
struct Theorem3Terms {
  BigInt shared_triple;
  BigInt shared_pair;
  BigInt private_pair;
};
Theorem3Terms theorem3_terms(int m, int k, int l);

/// floor((m-2-2k)/2), the integer l minimizing theorem3_value.
int theorem3_optimal_l(int m, int k);

/// theorem3_value(m, k, l) / (m-2)^(m-2).
double theorem3_normalized(int m, int k, int l);

/// 3/4 (1 - 1/e).
double asymptotic_coefficient();

enum class OptimizeMode { kFull, kReduced };
OptimizeMode parse_optimize_mode(std::string_view s);
std::string_view to_string(OptimizeMode m);

struct OptimizeOptions {
  OptimizeMode mode = OptimizeMode::kReduced;
  double grid_step = 0.005;
  double tol = 1e-8;
  /// Full mode only: pins coordinates, e.g. a4 = a5 = 0.
  std::array<std::optional<double>, 5> fixed{};
};

struct OptimizeResult {
  double value = 0;
  std::array<double, 5> alpha{};
  /// Exact value at alpha rounded to a nearby feasible rational point.
  Rational exact_value;
  AlphaVector exact_alpha;
  double grid_value = 0;  // best grid sample before refinement
  std::size_t grid_points = 0;
  int refine_iterations = 0;
};

/// Grid scan of the feasible simplex then Nelder-Mead refinement. Reduced mode
/// searches (a4, a5) with a1 = a2 = a3; full mode searches all five fractions.
OptimizeResult optimize_theorem2(const OptimizeOptions& options);

namespace serial {
OptimizeResult optimize_theorem2(const OptimizeOptions& options);
}  // namespace serial

}  // namespace listcover
