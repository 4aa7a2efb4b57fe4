#pragma once

#include <cstdint>
#include <vector>

#include "coupon/binomial.hpp"
#include "coupon/harmonic.hpp"

namespace coupon {

enum class Parity { kEven, kOdd };

inline Parity parity_of(std::uint64_t n) { return (n & 1) ? Parity::kOdd : Parity::kEven; }

// Exact expected runtime for one n, together with the quantities the
// deviation analysis is phrased in. deviation = n_h_half - expected_runtime
// lies in (0, 1) for every n >= 2 and converges to 1/2.
struct ExactResult {
  std::uint64_t n = 0;
  double expected_runtime = 0.0;  // E[T], rounds
  double n_h_half = 0.0;          // n * H_{n/2} (fractional convention for odd n)
  double deviation = 0.0;         // n_h_half - expected_runtime
  Parity parity = Parity::kEven;
};

enum class DeviationMode { kFull, kTruncated };

// Truncation window for the deviation sum: only a <= A = sqrt(c n ln n) is
// summed, and the neglected tail is bounded by n^3 * n^(-2c) (Chernoff).
// Requires c > 3/2 so the tail bound is o(1); default c = 2 makes it 1/n.
struct TruncationConfig {
  double c = 2.0;
  DeviationMode mode = DeviationMode::kFull;
};

struct DeviationResult {
  double value = 0.0;              // sum of pmf-weighted curvature terms
  double truncation_radius = 0.0;  // A = sqrt(c n ln n)
  double tail_bound = 0.0;         // n^(3 - 2c), the Chernoff bound on the cut tail
  std::uint64_t terms = 0;         // number of a-terms actually summed
  DeviationMode mode = DeviationMode::kFull;
};

struct EpsilonBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// One row of the per-a deviation diagnostics table.
struct EpsilonRow {
  std::uint64_t a = 0;
  double weight = 0.0;  // pmf mass paired with epsilon_a in the deviation sum
  double epsilon = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct VarianceCheck {
  double lhs = 0.0;  // pmf-weighted decomposition
  double rhs = 0.0;  // n / 4
};

struct TheoremReport {
  std::uint64_t n = 0;
  Parity parity = Parity::kEven;
  double deviation = 0.0;
  double gap = 0.0;          // |deviation - 1/2|
  double lower_bound = 0.0;  // 1/2 - 1/(n+2)
  double tolerance = 0.0;    // 20 ln(n) / n
  bool pass = false;
};

// n ln(n/2) + gamma n + 1/2. Requires n >= 2.
double asymptotic_expected_runtime(std::uint64_t n);

// Exact computation of E[T], the deviation d = n H_{n/2} - E[T], the
// curvature terms epsilon_a with their proof bounds, and the variance
// decomposition, for either parity of n. All methods are pure functions of
// their arguments plus the immutable harmonic table, so an engine may be
// shared across threads.
class ExactEngine {
 public:
  // Builds the harmonic table once, up to n_max (capacity error beyond kMaxN).
  explicit ExactEngine(std::uint64_t n_max);

  const HarmonicTable& table() const { return table_; }

  // E[T | X = k] = n * H_{n-k}: expected remaining rounds starting from k
  // already-collected types. Strictly decreasing in k.
  double conditional_expectation(std::uint64_t n, std::uint64_t k) const;

  // E[T] = sum_i pmf[i] * E[T | X = i], accumulated from the distribution
  // tails inward so the small contributions are added first.
  ExactResult expected_runtime(std::uint64_t n) const;

  // Closed-form epsilon_a. Valid for 1 <= a <= floor(n/2); equals the
  // defining difference of conditional expectations.
  double epsilon(std::uint64_t n, std::uint64_t a) const;

  // Parity-appropriate proof bounds with lower <= epsilon_a <= upper.
  static EpsilonBounds epsilon_bounds(std::uint64_t n, std::uint64_t a);

  // Deviation d as the pmf-weighted curvature sum; full mode sums every a,
  // truncated mode stops at A = sqrt(c n ln n) and reports the tail bound.
  // Full mode equals expected_runtime(n).deviation within 1e-9.
  DeviationResult deviation_direct(std::uint64_t n, TruncationConfig cfg = {}) const;

  // Per-a diagnostics (weight, epsilon, bounds) for a = 1..a_max.
  std::vector<EpsilonRow> epsilon_rows(std::uint64_t n, std::uint64_t a_max) const;

  // Variance decomposition of the initial-stake distribution:
  //   even n:  lhs = sum_a 2 a^2 pmf[n/2 + a]
  //   odd n:   lhs = 1/4 + sum_a 2 pmf[floor(n/2) - a] (a^2 + a)
  // rhs = n/4 in both cases.
  VarianceCheck variance_identity(std::uint64_t n) const;

  // Convergence report for d(n) against the proof bounds. Requires n >= 100.
  TheoremReport theorem_check(std::uint64_t n) const;

  // Report fields without the n >= 100 gate (used by sweeps over any n).
  TheoremReport theorem_row(std::uint64_t n) const;

 private:
  void validate_n(std::uint64_t n) const;

  HarmonicTable table_;
};

}  // namespace coupon
