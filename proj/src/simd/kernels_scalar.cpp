// SPDX-License-Identifier: Apache-2.0
#include "frontier/simd/kernels.hpp"

#include <cmath>

namespace frontier::simd::scalar {

// Chebyshev-style recurrences: sin((j+1)t) = 2 cos(t) sin(jt) - sin((j-1)t), and the same
// for cos. Only one sin/cos pair is needed per angle.

void harmonic_sine_sum(const double* sin_t, const double* cos_t, std::size_t n, int m, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double two_c = cos_t[i] + cos_t[i];
    double prev = 0.0;
    double cur = sin_t[i];
    double acc = 0.0;
    for (int j = 1; j <= m; ++j) {
      acc = acc + cur * (1.0 / j);
      const double next = two_c * cur - prev;
      prev = cur;
      cur = next;
    }
    out[i] = acc;
  }
}

void harmonic_cosine_sum(const double* cos_t, std::size_t n, int m, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double two_c = cos_t[i] + cos_t[i];
    double prev = 1.0;
    double cur = cos_t[i];
    double acc = 0.0;
    for (int j = 1; j <= m; ++j) {
      acc = acc + cur;
      const double next = two_c * cur - prev;
      prev = cur;
      cur = next;
    }
    out[i] = acc;
  }
}

void weighted_column_sums(const double* matrix, const double* weights, std::size_t rows,
                          std::size_t cols, double* out) {
  for (std::size_t i = 0; i < cols; ++i) out[i] = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    const double w = weights[r];
    const double* row = matrix + r * cols;
    for (std::size_t i = 0; i < cols; ++i) out[i] = out[i] + row[i] * w;
  }
}

double sum(const double* values, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += values[i];
  return acc;
}

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::abs(a[i] - b[i]);
  return acc;
}

}  // namespace frontier::simd::scalar
