// SPDX-License-Identifier: Apache-2.0
#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <random>
#include <vector>

#include "frontier/errors.hpp"
#include "frontier/simd/kernels.hpp"

using namespace frontier;
namespace sd = frontier::simd;

namespace {

struct Inputs {
  std::vector<double> theta, s, c;
};

Inputs random_angles(std::size_t n, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  Inputs in;
  for (std::size_t i = 0; i < n; ++i) {
    in.theta.push_back(angle(gen));
    in.s.push_back(std::sin(in.theta.back()));
    in.c.push_back(std::cos(in.theta.back()));
  }
  return in;
}

}  // namespace

TEST_CASE("scalar harmonic sums match direct evaluation") {
  const auto in = random_angles(101, 1);
  for (int m : {0, 1, 7, 32}) {
    std::vector<double> sine(in.theta.size()), cosine(in.theta.size());
    sd::scalar::harmonic_sine_sum(in.s.data(), in.c.data(), in.s.size(), m, sine.data());
    sd::scalar::harmonic_cosine_sum(in.c.data(), in.c.size(), m, cosine.data());
    for (std::size_t i = 0; i < in.theta.size(); ++i) {
      double ds = 0.0, dc = 0.0;
      for (int j = 1; j <= m; ++j) {
        ds += std::sin(j * in.theta[i]) / j;
        dc += std::cos(j * in.theta[i]);
      }
      CHECK(std::abs(sine[i] - ds) < 1e-12);
      CHECK(std::abs(cosine[i] - dc) < 1e-12);
    }
  }
}

#if defined(FRONTIER_HAVE_AVX2)
TEST_CASE("AVX2 kernels are bit-identical to scalar") {
  if (!sd::is_supported(sd::Isa::avx2)) SKIP("CPU lacks AVX2");
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 1024u, 1031u}) {
    const auto in = random_angles(n, static_cast<unsigned>(n) + 7);
    for (int m : {0, 1, 7, 32}) {
      std::vector<double> a(n), b(n);
      sd::scalar::harmonic_sine_sum(in.s.data(), in.c.data(), n, m, a.data());
      sd::avx2::harmonic_sine_sum(in.s.data(), in.c.data(), n, m, b.data());
      CHECK(a == b);
      sd::scalar::harmonic_cosine_sum(in.c.data(), n, m, a.data());
      sd::avx2::harmonic_cosine_sum(in.c.data(), n, m, b.data());
      CHECK(a == b);
    }
    const std::size_t rows = 23;
    std::vector<double> matrix(rows * n), weights(rows);
    std::mt19937_64 gen(n);
    std::normal_distribution<double> z;
    for (auto& v : matrix) v = z(gen);
    for (auto& v : weights) v = z(gen);
    std::vector<double> a(n), b(n);
    sd::scalar::weighted_column_sums(matrix.data(), weights.data(), rows, n, a.data());
    sd::avx2::weighted_column_sums(matrix.data(), weights.data(), rows, n, b.data());
    CHECK(a == b);

    const double s1 = sd::scalar::sum(in.theta.data(), n), s2 = sd::avx2::sum(in.theta.data(), n);
    CHECK(std::abs(s1 - s2) <= 1e-12 * (1.0 + std::abs(s1)) * static_cast<double>(n + 1));
    const double d1 = sd::scalar::abs_diff_sum(in.s.data(), in.c.data(), n);
    const double d2 = sd::avx2::abs_diff_sum(in.s.data(), in.c.data(), n);
    CHECK(std::abs(d1 - d2) <= 1e-13 * (1.0 + d1));
  }
}
#endif

#if defined(FRONTIER_HAVE_NEON)
TEST_CASE("NEON kernels are bit-identical to scalar") {
  for (std::size_t n : {0u, 1u, 2u, 3u, 17u, 1024u}) {
    const auto in = random_angles(n, static_cast<unsigned>(n) + 7);
    for (int m : {0, 1, 7, 32}) {
      std::vector<double> a(n), b(n);
      sd::scalar::harmonic_sine_sum(in.s.data(), in.c.data(), n, m, a.data());
      sd::neon::harmonic_sine_sum(in.s.data(), in.c.data(), n, m, b.data());
      CHECK(a == b);
    }
  }
}
#endif

TEST_CASE("dispatch honours the requested ISA") {
  const auto original = sd::active_isa();
  CHECK(sd::is_supported(sd::Isa::scalar));
  sd::set_active_isa(sd::Isa::scalar);
  CHECK(sd::active_isa() == sd::Isa::scalar);
  const auto in = random_angles(64, 3);
  std::vector<double> scalar_out(64), out(64);
  sd::harmonic_sine_sum(in.s, in.c, 9, scalar_out);
  sd::set_active_isa(sd::detected_isa());
  sd::harmonic_sine_sum(in.s, in.c, 9, out);
  CHECK(out == scalar_out);
  sd::set_active_isa(original);
#if !defined(FRONTIER_HAVE_NEON)
  CHECK_THROWS_AS(sd::set_active_isa(sd::Isa::neon), Error);
#endif
  CHECK(std::string(sd::to_string(sd::Isa::avx2)) == "avx2");
}

TEST_CASE("span entry points validate sizes") {
  std::vector<double> a(4), b(3), out(4);
  CHECK_THROWS_AS(sd::harmonic_sine_sum(a, b, 2, out), Error);
  CHECK_THROWS_AS(sd::abs_diff_sum(a, b), Error);
}
