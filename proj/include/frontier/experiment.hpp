// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "frontier/estimator.hpp"
#include "frontier/frontier_function.hpp"
#include "frontier/sample.hpp"

namespace frontier {

enum class Schedule { manual, corollary5 };
const char* to_string(Schedule schedule) noexcept;
Schedule parse_schedule(std::string_view text);

/// Monte Carlo configuration for the planar polar model. The defaults reproduce the
/// reference study: kind P, f = 1 + exp(-cos 3x), c = 1 / int f, n = 100, k_n = 20, m = 7.
struct ExperimentConfig {
  int reps = 100;
  int n = 100;
  int k = 20;
  int order = 7;
  double gamma = 0.95;
  std::size_t grid_size = 1024;
  std::uint64_t seed = 2007;
  std::string frontier = "paper";
  ProcessKind kind = ProcessKind::poisson;
  Schedule schedule = Schedule::manual;
  double u = 1.0;
  /// Intensity constant; defaults to 1 / int_0^{2 pi} f(x) dx.
  std::optional<double> c;
  int jobs = 1;
  int max_retries = 10;
  /// Directions at which CI coverage is tallied; empty disables it.
  std::vector<double> coverage_points;

  /// Validates and fills in k, m (corollary5) and c. Throws Error(invalid_argument).
  ExperimentConfig resolved() const;
};

/// l_n = round-to-even(n^(10/27)), m = l_n / 2, k_n = round(n^(14/27) (log n)^(2/7) u^2).
struct ScheduleChoice {
  int ell = 0;
  int order = 0;
  int k = 1;
};
ScheduleChoice corollary5_schedule(int n, double u);

/// int |f_hat - f| / int f by the periodic trapezoid rule on a uniform grid over [0, 2 pi).
double l1_relative_error(std::span<const double> f_hat, const FrontierFunction& f,
                         std::span<const double> grid);

struct ReplicationRecord {
  int rep = 0;
  double xi = 0.0;
  int retries = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> retried_seeds;
  std::size_t sample_size = 0;
  std::size_t clamped = 0;
  double c_hat = 0.0;
  std::vector<bool> covered;
};

struct CoverageEntry {
  double x = 0.0;
  std::size_t hits = 0;
  std::size_t total = 0;
  double fraction = 0.0;
  double standard_error = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;  // resolved
  std::vector<ReplicationRecord> replications;
  double xi_min = 0.0;
  double xi_mean = 0.0;
  double xi_max = 0.0;
  std::size_t best = 0;
  std::size_t worst = 0;
  std::size_t total_retries = 0;
  std::vector<CoverageEntry> coverage;
};

/// Runs the replications. A replication hitting an empty cell is re-drawn with seed
/// stream_seed(seed, r) ^ mix64(attempt), up to max_retries times; beyond that the run
/// fails with the EmptyCellError. The report does not depend on `jobs`.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Coverage of f(x) by the CI at each point, with binomial standard errors.
std::vector<CoverageEntry> coverage_study(ExperimentConfig config, std::vector<double> x_points);

/// Regenerates the sample and estimate of one recorded replication.
struct ReplicationReplay {
  PointSample sample;
  EstimateResult estimate;
};
ReplicationReplay replay(const ExperimentConfig& resolved, const ReplicationRecord& record);

nlohmann::json experiment_to_json(const ExperimentReport& report);
/// `rep,xi_n,retries`.
void write_experiment_csv(std::ostream& out, const ExperimentReport& report);
/// `x,f,f_hat,ci_lo,ci_hi`.
void write_replication_csv(std::ostream& out, const EstimateResult& estimate, const FrontierFunction& f);

/// Writes `<prefix>.json`, `<prefix>.csv`, and best/worst estimates and samples.
void save_experiment(const ExperimentReport& report, const std::filesystem::path& prefix);

}  // namespace frontier
