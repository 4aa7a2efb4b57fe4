#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

// Reduction kernels shared by the exact engine. Every kernel accumulates
// with Neumaier compensation, so the result carries O(eps) rounding error
// instead of O(len * eps). A scalar reference implementation always exists;
// on x86-64 an AVX2 variant is selected at runtime (one compensated
// accumulator per lane, lanes folded at the end). The two backends agree to
// a few ulps of the absolute term sum and are equivalence-tested.

namespace coupon::kernels {

enum class Backend { kScalar, kAvx2 };

// Running compensated (Neumaier) sum. get() folds the carry back in.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }

  double get() const { return sum + carry; }
};

// One term of the curvature sum: epsilon_a = n * sum_{i<a} curvature_term(n, i).
// Even n (m = n/2):        (2i+1) / ((m-i) * (m+i+1))
// Odd n  (c = (n+1)/2):    (2i+2) / ((c-1-i) * (c+1+i))
// Factors stay below 2^53, so both products round exactly once and the
// scalar and SIMD paths produce bitwise-identical terms.
inline double curvature_term(std::uint64_t n, std::uint64_t i) {
  const double di = static_cast<double>(i);
  if (n & 1) {
    const double c = static_cast<double>((n + 1) / 2);
    return (2.0 * di + 2.0) / ((c - 1.0 - di) * (c + 1.0 + di));
  }
  const double m = static_cast<double>(n / 2);
  return (2.0 * di + 1.0) / ((m - di) * (m + di + 1.0));
}

// sum:             sum_t x[t]
// dot:             sum_t a[t] * b[t]
// dot_rev:         sum_t a[t] * b[len-1-t]
// poly2_weight_sum: sum_t w[t] * (c2*(t+1)^2 + c1*(t+1))
// curvature_terms: out[t] = curvature_term(n, i0 + t)
double sum(const double* x, std::size_t len);
double dot(const double* a, const double* b, std::size_t len);
double dot_rev(const double* a, const double* b, std::size_t len);
double poly2_weight_sum(const double* w, std::size_t len, double c2, double c1);
void curvature_terms(std::uint64_t n, std::uint64_t i0, std::size_t len, double* out);

Backend active_backend();
void set_backend(Backend backend);  // DomainError if unsupported on this host
bool avx2_supported();

namespace scalar {
double sum(const double* x, std::size_t len);
double dot(const double* a, const double* b, std::size_t len);
double dot_rev(const double* a, const double* b, std::size_t len);
double poly2_weight_sum(const double* w, std::size_t len, double c2, double c1);
void curvature_terms(std::uint64_t n, std::uint64_t i0, std::size_t len, double* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double sum(const double* x, std::size_t len);
double dot(const double* a, const double* b, std::size_t len);
double dot_rev(const double* a, const double* b, std::size_t len);
double poly2_weight_sum(const double* w, std::size_t len, double c2, double c1);
void curvature_terms(std::uint64_t n, std::uint64_t i0, std::size_t len, double* out);
}  // namespace avx2
#endif

}  // namespace coupon::kernels
