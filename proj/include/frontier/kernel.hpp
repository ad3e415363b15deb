// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frontier/partition.hpp"
#include "frontier/polar.hpp"

namespace frontier {

/// Dirichlet smoothing kernel of harmonic order m (l_n = 2m harmonics):
///
///   K(x, t) = 1 + 2 sum_{j=1}^{m} cos(j (x - t)) = sin((2m+1)(x-t)/2) / sin((x-t)/2),
///
/// normalised so that int_E K(x, t) h_2(t) dt = 1. For d = 3 the kernel is the product of
/// the Legendre projection kernel sum_{l<=m} (2l+1) P_l(cos x1) P_l(cos t1) in the polar
/// angle and the Dirichlet kernel in the azimuth, normalised against h_3.
struct KernelSpec {
  int order = 0;

  int harmonics() const noexcept { return 2 * order; }
  /// K(x, x) for d = 2, i.e. l_n + 1.
  double diagonal() const noexcept { return 2.0 * order + 1.0; }
};

double kernel_eval(const KernelSpec& spec, double x, double t);
double kernel_eval(const KernelSpec& spec, std::span<const double> x, std::span<const double> t);

/// (1 / 2 pi) int_a^b K(x, t) dt for the planar kernel, from the exact antiderivative
/// (b - a)/(2 pi) + (1/pi) sum_j [sin(j(x-a)) - sin(j(x-b))] / j.
double kernel_cell_integral(const KernelSpec& spec, double x, double a, double b);

/// int_{I_r} K(x, t) nu(dt) for cell r of `partition`.
double kernel_cell_measure(const KernelSpec& spec, const Partition& partition, std::size_t r,
                           std::span<const double> x);

/// Weights for one query direction: kappa_{n,r}(x) = k_n int_{I_r} K(x, .) dnu,
/// kappa_n(x) = (sum_r kappa_{n,r}^2)^(1/2) and w_{n,r} = kappa_{n,r} / kappa_n.
struct WeightTable {
  std::vector<double> kappa;
  double kappa_norm = 0.0;
  std::vector<double> w;
  /// k_n^(1/2) ||K(x, .)||_2, the large-n equivalent of kappa_n(x).
  double asymptotic_norm = 0.0;
};

/// Throws Error(degenerate_weights) when kappa_n(x) = 0.
WeightTable weight_table(const KernelSpec& spec, const Partition& partition,
                         std::span<const double> x);

/// kappa_{n,r}(x_i) for many query directions, stored cell-major: kappa(r, i) at
/// r * points() + i. The planar case runs through the SIMD harmonic kernels.
class WeightMatrix {
 public:
  WeightMatrix(const KernelSpec& spec, const Partition& partition, std::span<const Direction> queries);

  std::size_t cells() const noexcept { return cells_; }
  std::size_t points() const noexcept { return points_; }
  double kappa(std::size_t r, std::size_t i) const { return data_[r * points_ + i]; }
  std::span<const double> data() const noexcept { return data_; }
  /// kappa_n(x_i).
  double norm(std::size_t i) const { return norms_[i]; }
  /// k_n^(1/2) ||K(x_i, .)||_2.
  double asymptotic_norm(std::size_t i) const { return asymptotic_[i]; }
  /// Row i as a WeightTable.
  WeightTable table(std::size_t i) const;

 private:
  std::size_t cells_;
  std::size_t points_;
  std::vector<double> data_;
  std::vector<double> norms_;
  std::vector<double> asymptotic_;
};

}  // namespace frontier
