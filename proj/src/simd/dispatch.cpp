// SPDX-License-Identifier: Apache-2.0
#include <atomic>
#include <cstdlib>
#include <string_view>

#include "frontier/errors.hpp"
#include "frontier/simd/kernels.hpp"

namespace frontier::simd {

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool is_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(FRONTIER_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(FRONTIER_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() noexcept {
  if (is_supported(Isa::avx2)) return Isa::avx2;
  if (is_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

namespace {

Isa initial_isa() noexcept {
  if (const char* env = std::getenv("FRONTIER_SIMD")) {
    const std::string_view name(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
      if (name == to_string(isa) && is_supported(isa)) return isa;
  }
  return detected_isa();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!is_supported(isa))
    throw Error(Errc::invalid_argument, std::string("SIMD variant not supported: ") + to_string(isa));
  current().store(isa, std::memory_order_relaxed);
}

namespace {

void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw Error(Errc::invalid_argument, "SIMD kernel spans differ in length");
}

}  // namespace

void harmonic_sine_sum(std::span<const double> sin_t, std::span<const double> cos_t, int m,
                       std::span<double> out) {
  check_same_size(sin_t.size(), cos_t.size());
  check_same_size(sin_t.size(), out.size());
  switch (active_isa()) {
#if defined(FRONTIER_HAVE_AVX2)
    case Isa::avx2: return avx2::harmonic_sine_sum(sin_t.data(), cos_t.data(), out.size(), m, out.data());
#endif
#if defined(FRONTIER_HAVE_NEON)
    case Isa::neon: return neon::harmonic_sine_sum(sin_t.data(), cos_t.data(), out.size(), m, out.data());
#endif
    default: return scalar::harmonic_sine_sum(sin_t.data(), cos_t.data(), out.size(), m, out.data());
  }
}

void harmonic_cosine_sum(std::span<const double> cos_t, int m, std::span<double> out) {
  check_same_size(cos_t.size(), out.size());
  switch (active_isa()) {
#if defined(FRONTIER_HAVE_AVX2)
    case Isa::avx2: return avx2::harmonic_cosine_sum(cos_t.data(), out.size(), m, out.data());
#endif
#if defined(FRONTIER_HAVE_NEON)
    case Isa::neon: return neon::harmonic_cosine_sum(cos_t.data(), out.size(), m, out.data());
#endif
    default: return scalar::harmonic_cosine_sum(cos_t.data(), out.size(), m, out.data());
  }
}

void weighted_column_sums(std::span<const double> matrix, std::span<const double> weights,
                          std::span<double> out) {
  check_same_size(matrix.size(), weights.size() * out.size());
  const std::size_t rows = weights.size();
  const std::size_t cols = out.size();
  switch (active_isa()) {
#if defined(FRONTIER_HAVE_AVX2)
    case Isa::avx2: return avx2::weighted_column_sums(matrix.data(), weights.data(), rows, cols, out.data());
#endif
#if defined(FRONTIER_HAVE_NEON)
    case Isa::neon: return neon::weighted_column_sums(matrix.data(), weights.data(), rows, cols, out.data());
#endif
    default: return scalar::weighted_column_sums(matrix.data(), weights.data(), rows, cols, out.data());
  }
}

double sum(std::span<const double> values) {
  switch (active_isa()) {
#if defined(FRONTIER_HAVE_AVX2)
    case Isa::avx2: return avx2::sum(values.data(), values.size());
#endif
#if defined(FRONTIER_HAVE_NEON)
    case Isa::neon: return neon::sum(values.data(), values.size());
#endif
    default: return scalar::sum(values.data(), values.size());
  }
}

double abs_diff_sum(std::span<const double> a, std::span<const double> b) {
  check_same_size(a.size(), b.size());
  switch (active_isa()) {
#if defined(FRONTIER_HAVE_AVX2)
    case Isa::avx2: return avx2::abs_diff_sum(a.data(), b.data(), a.size());
#endif
#if defined(FRONTIER_HAVE_NEON)
    case Isa::neon: return neon::abs_diff_sum(a.data(), b.data(), a.size());
#endif
    default: return scalar::abs_diff_sum(a.data(), b.data(), a.size());
  }
}

}  // namespace frontier::simd
