// SPDX-License-Identifier: Apache-2.0
//
// AArch64 NEON variants. Uses separate vmulq/vaddq (never vfmaq) to stay bit-identical to
// the scalar reference.
#include <arm_neon.h>

#include "frontier/simd/kernels.hpp"

namespace frontier::simd::neon {

void harmonic_sine_sum(const double* sin_t, const double* cos_t, std::size_t n, int m, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t c = vld1q_f64(cos_t + i);
    const float64x2_t two_c = vaddq_f64(c, c);
    float64x2_t prev = vdupq_n_f64(0.0);
    float64x2_t cur = vld1q_f64(sin_t + i);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (int j = 1; j <= m; ++j) {
      acc = vaddq_f64(acc, vmulq_f64(cur, vdupq_n_f64(1.0 / j)));
      const float64x2_t next = vsubq_f64(vmulq_f64(two_c, cur), prev);
      prev = cur;
      cur = next;
    }
    vst1q_f64(out + i, acc);
  }
  scalar::harmonic_sine_sum(sin_t + i, cos_t + i, n - i, m, out + i);
}

void harmonic_cosine_sum(const double* cos_t, std::size_t n, int m, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t c = vld1q_f64(cos_t + i);
    const float64x2_t two_c = vaddq_f64(c, c);
    float64x2_t prev = vdupq_n_f64(1.0);
    float64x2_t cur = c;
    float64x2_t acc = vdupq_n_f64(0.0);
    for (int j = 1; j <= m; ++j) {
      acc = vaddq_f64(acc, cur);
      const float64x2_t next = vsubq_f64(vmulq_f64(two_c, cur), prev);
      prev = cur;
      cur = next;
    }
    vst1q_f64(out + i, acc);
  }
  scalar::harmonic_cosine_sum(cos_t + i, n - i, m, out + i);
}

void weighted_column_sums(const double* matrix, const double* weights, std::size_t rows,
                          std::size_t cols, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= cols; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t r = 0; r < rows; ++r)
      acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(matrix + r * cols + i), vdupq_n_f64(weights[r])));
    vst1q_f64(out + i, acc);
  }
  for (; i < cols; ++i) {
    double acc = 0.0;
    for (std::size_t r = 0; r < rows; ++r) acc = acc + matrix[r * cols + i] * weights[r];
    out[i] = acc;
  }
}

double sum(const double* values, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(values + i));
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) total += values[i];
  return total;
}

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vabdq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) total += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return total;
}

}  // namespace frontier::simd::neon
