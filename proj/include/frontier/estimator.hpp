// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "frontier/kernel.hpp"
#include "frontier/partition.hpp"
#include "frontier/process_model.hpp"
#include "frontier/sample.hpp"

namespace frontier {

/// Per-cell extremes of a sample. Empty cells hold the (0, 0) convention with V* = 0.
struct CellSummary {
  int dimension = 2;
  std::vector<std::size_t> counts;
  std::vector<double> x_star;  // flat, stride d - 1
  std::vector<double> y_star;
  std::vector<double> v_star;  // Phi_{X*}(Y*)
  std::size_t total = 0;

  std::size_t cells() const noexcept { return counts.size(); }
  std::size_t empty_cells() const noexcept;
  std::span<const double> extreme_direction(std::size_t r) const {
    const auto stride = static_cast<std::size_t>(dimension - 1);
    return {x_star.data() + r * stride, stride};
  }
};

/// Single pass over the sample: assigns each point to its cell and keeps the argmax of
/// Phi_X(Y). Throws Error(out_of_domain) for a point whose direction lies outside E.
CellSummary cell_maxima(const PointSample& sample, const Partition& partition,
                        const ProcessModel& model);

/// c_hat = (k_n^2 / n) (sum_r V*_r / N_r)^{-1}.
/// Throws EmptyCellError when a cell is empty and Error(degenerate) when the sum is 0.
double c_hat_global(const CellSummary& summary, double n);

/// g_hat(x) = sum_r nu_r kappa_r(x) (V*_r + 1 / (n c_hat nu_r)).
double g_hat(const CellSummary& summary, const Partition& partition, const WeightTable& weights,
             double c_hat, double n);

struct FrontierValue {
  double f_hat = 0.0;
  double g_hat = 0.0;
  /// g_hat was negative (possible with signed kernel weights) and was clamped to 0.
  bool clamped = false;
};

/// f_hat(x) = Phi_x^{-1}(g_hat(x)), with negative g_hat clamped to 0 and flagged.
FrontierValue f_hat(const CellSummary& summary, const Partition& partition,
                    const WeightTable& weights, double c_hat, double n, const ProcessModel& model,
                    std::span<const double> x);

/// Polar estimator written directly in the cell radii:
///   (sum_r [A_r(x) + A_E(x) / (k_n N_r)] (Y*_r)^d)^(1/d),
/// with A_r(x) = int_{I_r} K(x, .) dnu = kappa_r(x) / k_n and A_E = sum_r A_r.
/// Valid for equiprobable partitions; does not use c_hat.
double f_hat_polar_direct(const CellSummary& summary, const WeightTable& weights);

struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 0.0;
  double half_width = 0.0;
};

/// f_hat -/+ z_gamma kappa_n(x) / (n c_hat phi(x, f_hat)); the lower end is clamped at 0.
/// Throws Error(undefined_interval) when phi(x, f_hat) = 0.
ConfidenceInterval confidence_interval(double f_hat_value, std::span<const double> x,
                                       double c_hat, double n, const WeightTable& weights,
                                       const ProcessModel& model, double gamma);

struct EstimatorSettings {
  int k = 20;
  KernelSpec kernel{7};
  std::size_t grid_size = 1024;
  double gamma = 0.95;
  /// Explicit query directions; when empty, a uniform grid of `grid_size` points is used.
  std::vector<Direction> queries;
};

/// Normalisations of the limit theorems evaluated at the estimate.
struct TheoryNormalization {
  /// v_n = n (l_n k_n)^(-1/2); NaN when l_n = 0.
  double v_n = 0.0;
  /// n c_hat phi(x, f_hat) / kappa_n(x), the scale of the pointwise CLT.
  std::vector<double> clt_scale;
  /// n k_n^(-1/2) ||K(x, .)||_2^(-1) c_hat gamma_d f_hat^(d-1) (polar model).
  std::vector<double> polar_scale;
  /// v_n c_hat f_hat, the d = 2 scaling without the gamma_d factor.
  std::vector<double> rate_scale;
};

/// Data-side diagnostics available without knowing f.
struct EstimateSnapshot {
  std::size_t min_count = 0;
  std::size_t max_count = 0;
  double mean_count = 0.0;
  double nu_n = 0.0;
  double max_abs_weight = 0.0;
  std::size_t clamped = 0;
};

struct EstimateResult {
  std::vector<Direction> grid;
  std::vector<double> f_hat;
  std::vector<double> g_hat;
  std::vector<double> ci_lower;
  std::vector<double> ci_upper;
  std::vector<double> ci_half_width;
  std::vector<bool> clamped;
  double c_hat = 0.0;
  double gamma = 0.95;
  double z_gamma = 0.0;

  int dimension = 2;
  int n = 0;
  int k = 0;
  int order = 0;
  char kind = 'P';
  std::string model_tag;
  std::size_t sample_size = 0;

  TheoryNormalization normalization;
  EstimateSnapshot snapshot;
};

/// Uniform query grid: d = 2 gives x_i = 2 pi i / size; d = 3 a product of polar band
/// midpoints and equidistant azimuths.
std::vector<Direction> default_grid(int d, std::size_t size);

/// Partition, query grid and kernel weights prepared once and reused across samples.
class EstimatorPlan {
 public:
  EstimatorPlan(int d, EstimatorSettings settings);

  EstimateResult run(const PointSample& sample, const ProcessModel& model) const;

  const EstimatorSettings& settings() const noexcept { return settings_; }
  const Partition& partition() const noexcept { return partition_; }
  const std::vector<Direction>& grid() const noexcept { return grid_; }
  const WeightMatrix& weights() const noexcept { return weights_; }

 private:
  EstimatorSettings settings_;
  Partition partition_;
  std::vector<Direction> grid_;
  WeightMatrix weights_;
};

/// partition -> cell_maxima -> c_hat_global -> f_hat and CI on the grid.
/// Propagates EmptyCellError with the number of empty cells.
EstimateResult estimate_pipeline(const PointSample& sample, const ProcessModel& model,
                                 const EstimatorSettings& settings);

/// Same, with the polar model of the sample's dimension.
EstimateResult estimate_pipeline(const PointSample& sample, const EstimatorSettings& settings);

}  // namespace frontier
