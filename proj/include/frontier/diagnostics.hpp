// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "frontier/frontier_function.hpp"
#include "frontier/kernel.hpp"
#include "frontier/partition.hpp"
#include "frontier/process_model.hpp"

namespace frontier {

/// One finite-n proxy for an asymptotic condition. Conditions of the form "ratio -> 0"
/// report the ratio at the given n and are flagged when it lies below the threshold.
struct ConditionEntry {
  std::string name;
  double x = 0.0;  // query direction, NaN for global entries
  double value = 0.0;
  double threshold = 1.0;
  bool satisfied = false;
};

struct PointDiagnostics {
  double x = 0.0;
  double psi = 0.0;        // |int K(x, t) f^d(t) nu(dt) - f^d(x)|
  double xi = 0.0;         // loss of information from the partition
  double gamma_max = 0.0;  // max_r oscillation of K(x, .) over I_r
  double k_l1 = 0.0;
  double k_l2 = 0.0;
  double k_sup = 0.0;
  double max_abs_w = 0.0;
  double sum_w = 0.0;
  double kappa_norm = 0.0;
  double kappa_over_n = 0.0;
  double smoothed_g = 0.0;  // g_n(x) = sum_r kappa_r(x) int_{I_r} g dnu
  double g = 0.0;
};

struct DiagnosticsOptions {
  std::size_t grid_per_cell = 64;
  std::vector<double> x_points{0.0, 1.5707963267948966, 3.141592653589793};
};

struct DiagnosticsReport {
  int n = 0;
  int k = 0;
  int order = 0;
  std::string frontier_tag;
  std::string model_tag;
  std::size_t grid_per_cell = 64;

  double delta_n = 0.0;  // max_r nu_r osc_{I_r} g
  double omega_n = 0.0;  // max_r osc_{I_r} f^d
  double nu_n = 0.0;
  double n_nu_over_log_n = 0.0;
  double expected_count = 0.0;  // n c int g dnu

  std::vector<PointDiagnostics> points;
  /// sum_r w_r(x_i) w_r(x_j) over all pairs of query points, row-major.
  std::vector<double> weight_covariance;
  std::vector<ConditionEntry> conditions;
};

/// Finite-n diagnostics for the planar model (d = 2). Suprema and oscillations are taken
/// over `grid_per_cell` midpoints per cell; integrals over E use the same points.
DiagnosticsReport diagnostics_report(const KernelSpec& spec, const Partition& partition,
                                     const FrontierFunction& f, const ProcessModel& model, int n,
                                     const DiagnosticsOptions& options = {});

nlohmann::json diagnostics_to_json(const DiagnosticsReport& report);

}  // namespace frontier
