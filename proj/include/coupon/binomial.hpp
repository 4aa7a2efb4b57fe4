#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace coupon {

// pmf of Binomial(n, 1/2): pmf[i] = C(n, i) / 2^n.
//
// The central term is evaluated in logarithmic space (long-double lgamma)
// and the rest of the upper half follows the exact ratio recurrence
// pmf[i+1] = pmf[i] * (n-i) / (i+1); the lower half is mirrored, so the
// p = 1/2 symmetry pmf[i] == pmf[n-i] holds bitwise. A final compensated
// normalization pins the total mass to 1 within ~1e-16, which the
// deviation identities downstream depend on. No intermediate overflows;
// entries only underflow to 0 once the true value drops below ~1e-308.
class BinomialWeights {
 public:
  explicit BinomialWeights(std::uint64_t n);  // 1 <= n <= kMaxN

  std::uint64_t n() const { return pmf_.size() - 1; }
  double operator[](std::uint64_t i) const { return pmf_[i]; }
  std::span<const double> pmf() const { return pmf_; }
  const double* data() const { return pmf_.data(); }

 private:
  std::vector<double> pmf_;
};

}  // namespace coupon
