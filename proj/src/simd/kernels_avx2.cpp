// SPDX-License-Identifier: Apache-2.0
//
// Built with -mavx2 only (no -mfma): every multiply-add below is two rounded operations,
// matching the scalar reference bit for bit.
#include <immintrin.h>

#include "frontier/simd/kernels.hpp"

namespace frontier::simd::avx2 {

void harmonic_sine_sum(const double* sin_t, const double* cos_t, std::size_t n, int m, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d c = _mm256_loadu_pd(cos_t + i);
    const __m256d two_c = _mm256_add_pd(c, c);
    __m256d prev = _mm256_setzero_pd();
    __m256d cur = _mm256_loadu_pd(sin_t + i);
    __m256d acc = _mm256_setzero_pd();
    for (int j = 1; j <= m; ++j) {
      acc = _mm256_add_pd(acc, _mm256_mul_pd(cur, _mm256_set1_pd(1.0 / j)));
      const __m256d next = _mm256_sub_pd(_mm256_mul_pd(two_c, cur), prev);
      prev = cur;
      cur = next;
    }
    _mm256_storeu_pd(out + i, acc);
  }
  scalar::harmonic_sine_sum(sin_t + i, cos_t + i, n - i, m, out + i);
}

void harmonic_cosine_sum(const double* cos_t, std::size_t n, int m, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d c = _mm256_loadu_pd(cos_t + i);
    const __m256d two_c = _mm256_add_pd(c, c);
    __m256d prev = _mm256_set1_pd(1.0);
    __m256d cur = c;
    __m256d acc = _mm256_setzero_pd();
    for (int j = 1; j <= m; ++j) {
      acc = _mm256_add_pd(acc, cur);
      const __m256d next = _mm256_sub_pd(_mm256_mul_pd(two_c, cur), prev);
      prev = cur;
      cur = next;
    }
    _mm256_storeu_pd(out + i, acc);
  }
  scalar::harmonic_cosine_sum(cos_t + i, n - i, m, out + i);
}

void weighted_column_sums(const double* matrix, const double* weights, std::size_t rows,
                          std::size_t cols, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= cols; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t r = 0; r < rows; ++r) {
      const __m256d w = _mm256_set1_pd(weights[r]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(matrix + r * cols + i), w));
    }
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < cols; ++i) {
    double acc = 0.0;
    for (std::size_t r = 0; r < rows; ++r) acc = acc + matrix[r * cols + i] * weights[r];
    out[i] = acc;
  }
}

namespace {

double horizontal_sum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

double sum(const double* values, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(values + i));
  double total = horizontal_sum(acc);
  for (; i < n; ++i) total += values[i];
  return total;
}

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign_mask, diff));
  }
  double total = horizontal_sum(acc);
  for (; i < n; ++i) total += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return total;
}

}  // namespace frontier::simd::avx2
