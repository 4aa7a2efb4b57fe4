#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace coupon {

// Euler-Mascheroni constant, stored as a literal (not computed at runtime).
inline constexpr double kEulerMascheroni = 0.57721566490153286060651209008240243;

// Largest n for which O(n)-memory tables (harmonic prefix sums, binomial
// pmf) are built. Roughly 80 MB per table at the limit; beyond it the
// library reports a capacity error and only closed-form asymptotics apply.
inline constexpr std::uint64_t kMaxN = 10'000'000;

// Prefix table of harmonic numbers H_0..H_max built with compensated
// summation in ascending index order. H_0 = 0 (empty sum). Immutable after
// construction; safe for concurrent reads.
class HarmonicTable {
 public:
  explicit HarmonicTable(std::uint64_t max_index);

  // H_k. DomainError if k exceeds the table.
  double operator[](std::uint64_t k) const;

  // H_{n/2} with the fractional convention: H_{n/2} for even n,
  // (H_{(n-1)/2} + H_{(n+1)/2}) / 2 for odd n. Requires n >= 1.
  double half(std::uint64_t n) const;

  std::uint64_t max_index() const { return values_.size() - 1; }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

// ln n + gamma + 1/(2n); within 1/(6 n^2) of H_n for every n >= 1.
double harmonic_asymptotic(std::uint64_t n);

}  // namespace coupon
