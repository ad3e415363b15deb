// SPDX-License-Identifier: Apache-2.0
//
// Data-parallel inner loops with a scalar reference and SIMD variants chosen at runtime.
//
// Element-wise kernels (harmonic sums, column sums) perform the same operations in the
// same order in every variant, so their outputs are bit-identical across ISAs. The
// reductions (sum, abs_diff_sum) accumulate in lanes and agree to rounding only.
#pragma once

#include <cstddef>
#include <span>

namespace frontier::simd {

enum class Isa { scalar, avx2, neon };

const char* to_string(Isa isa) noexcept;

/// True when this build has the variant and the running CPU can execute it.
bool is_supported(Isa isa) noexcept;

/// Best supported ISA on this machine.
Isa detected_isa() noexcept;

/// ISA used by the dispatching entry points. Defaults to detected_isa(); the environment
/// variable FRONTIER_SIMD=scalar|avx2|neon overrides it when supported.
Isa active_isa() noexcept;

/// Forces the dispatching entry points onto `isa`. Throws Error(invalid_argument) when
/// `isa` is not supported.
void set_active_isa(Isa isa);

/// out[i] = sum_{j=1}^{m} sin(j t_i) / j, given sin_t[i] = sin t_i and cos_t[i] = cos t_i.
void harmonic_sine_sum(std::span<const double> sin_t, std::span<const double> cos_t, int m,
                       std::span<double> out);

/// out[i] = sum_{j=1}^{m} cos(j t_i), given cos_t[i] = cos t_i.
void harmonic_cosine_sum(std::span<const double> cos_t, int m, std::span<double> out);

/// out[i] = sum_r matrix[r * out.size() + i] * weights[r], accumulated over r in order.
void weighted_column_sums(std::span<const double> matrix, std::span<const double> weights,
                          std::span<double> out);

double sum(std::span<const double> values);

/// sum_i |a_i - b_i|.
double abs_diff_sum(std::span<const double> a, std::span<const double> b);

// Per-ISA entry points, exposed for equivalence tests and benchmarks.

namespace scalar {
void harmonic_sine_sum(const double* sin_t, const double* cos_t, std::size_t n, int m, double* out);
void harmonic_cosine_sum(const double* cos_t, std::size_t n, int m, double* out);
void weighted_column_sums(const double* matrix, const double* weights, std::size_t rows,
                          std::size_t cols, double* out);
double sum(const double* values, std::size_t n);
double abs_diff_sum(const double* a, const double* b, std::size_t n);
}  // namespace scalar

#if defined(FRONTIER_HAVE_AVX2)
namespace avx2 {
void harmonic_sine_sum(const double* sin_t, const double* cos_t, std::size_t n, int m, double* out);
void harmonic_cosine_sum(const double* cos_t, std::size_t n, int m, double* out);
void weighted_column_sums(const double* matrix, const double* weights, std::size_t rows,
                          std::size_t cols, double* out);
double sum(const double* values, std::size_t n);
double abs_diff_sum(const double* a, const double* b, std::size_t n);
}  // namespace avx2
#endif

#if defined(FRONTIER_HAVE_NEON)
namespace neon {
void harmonic_sine_sum(const double* sin_t, const double* cos_t, std::size_t n, int m, double* out);
void harmonic_cosine_sum(const double* cos_t, std::size_t n, int m, double* out);
void weighted_column_sums(const double* matrix, const double* weights, std::size_t rows,
                          std::size_t cols, double* out);
double sum(const double* values, std::size_t n);
double abs_diff_sum(const double* a, const double* b, std::size_t n);
}  // namespace neon
#endif

}  // namespace frontier::simd
