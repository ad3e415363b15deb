// SPDX-License-Identifier: Apache-2.0
#include "frontier/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "frontier/errors.hpp"
#include "frontier/normal.hpp"
#include "frontier/simd/kernels.hpp"

namespace frontier {
namespace {

void require_cells(const CellSummary& summary, std::size_t cells) {
  if (summary.cells() != cells)
    throw Error(Errc::invalid_argument, "cell summary and weights have different cell counts");
}

void require_all_occupied(const CellSummary& summary) {
  const std::size_t empty = summary.empty_cells();
  if (empty > 0) throw EmptyCellError(empty, summary.cells());
}

// nu_r V*_r + 1 / (n c_hat), the per-cell coefficient of kappa_r(x) in g_hat.
std::vector<double> cell_coefficients(const CellSummary& summary, const Partition& partition,
                                      double c_hat, double n) {
  if (!(c_hat > 0.0)) throw Error(Errc::invalid_argument, "c_hat must be positive");
  if (!(n > 0.0)) throw Error(Errc::invalid_argument, "n must be positive");
  if (partition.size() != summary.cells())
    throw Error(Errc::invalid_argument, "cell summary does not match the partition");
  const double correction = 1.0 / (n * c_hat);
  std::vector<double> coef(summary.cells());
  for (std::size_t r = 0; r < coef.size(); ++r)
    coef[r] = partition.measure(r) * summary.v_star[r] + correction;
  return coef;
}

}  // namespace

std::size_t CellSummary::empty_cells() const noexcept {
  return static_cast<std::size_t>(std::count(counts.begin(), counts.end(), std::size_t{0}));
}

CellSummary cell_maxima(const PointSample& sample, const Partition& partition,
                        const ProcessModel& model) {
  const int d = sample.dimension();
  if (partition.dimension() != d || model.dimension() != d)
    throw Error(Errc::invalid_argument, "sample, partition and model dimensions differ");
  const auto stride = static_cast<std::size_t>(d - 1);
  const std::size_t k = partition.size();

  CellSummary s;
  s.dimension = d;
  s.counts.assign(k, 0);
  s.x_star.assign(k * stride, 0.0);
  s.y_star.assign(k, 0.0);
  s.v_star.assign(k, 0.0);
  s.total = sample.size();

  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto x = sample.direction(i);
    const std::size_t r = partition.cell_of(x);
    const double y = sample.radius(i);
    const double v = model.quantile_forward(x, y);
    if (s.counts[r] == 0 || v > s.v_star[r]) {
      s.v_star[r] = v;
      s.y_star[r] = y;
      std::copy(x.begin(), x.end(), s.x_star.begin() + static_cast<std::ptrdiff_t>(r * stride));
    }
    ++s.counts[r];
  }
  return s;
}

double c_hat_global(const CellSummary& summary, double n) {
  if (!(n > 0.0)) throw Error(Errc::invalid_argument, "n must be positive");
  require_all_occupied(summary);
  double total = 0.0;
  for (std::size_t r = 0; r < summary.cells(); ++r)
    total += summary.v_star[r] / static_cast<double>(summary.counts[r]);
  if (!(total > 0.0)) throw Error(Errc::degenerate, "all cell extremes are zero");
  const double k = static_cast<double>(summary.cells());
  return k * k / n / total;
}

double g_hat(const CellSummary& summary, const Partition& partition, const WeightTable& weights,
             double c_hat, double n) {
  require_cells(summary, weights.kappa.size());
  const auto coef = cell_coefficients(summary, partition, c_hat, n);
  double out[1];
  simd::weighted_column_sums(weights.kappa, coef, out);
  return out[0];
}

FrontierValue f_hat(const CellSummary& summary, const Partition& partition,
                    const WeightTable& weights, double c_hat, double n, const ProcessModel& model,
                    std::span<const double> x) {
  FrontierValue v;
  v.g_hat = g_hat(summary, partition, weights, c_hat, n);
  const double u = v.g_hat < 0.0 ? 0.0 : v.g_hat;
  v.clamped = v.g_hat < 0.0;
  v.f_hat = model.quantile_inverse(x, u);
  return v;
}

double f_hat_polar_direct(const CellSummary& summary, const WeightTable& weights) {
  require_cells(summary, weights.kappa.size());
  require_all_occupied(summary);
  const double k = static_cast<double>(summary.cells());
  const int d = summary.dimension;

  double a_total = 0.0;
  for (double kappa : weights.kappa) a_total += kappa / k;
  double total = 0.0;
  for (std::size_t r = 0; r < summary.cells(); ++r) {
    const double a_r = weights.kappa[r] / k;
    const double coef = a_r + a_total / (k * static_cast<double>(summary.counts[r]));
    total += coef * std::pow(summary.y_star[r], d);
  }
  if (total <= 0.0) return 0.0;
  return std::pow(total, 1.0 / d);
}

ConfidenceInterval confidence_interval(double f_hat_value, std::span<const double> x,
                                       double c_hat, double n, const WeightTable& weights,
                                       const ProcessModel& model, double gamma) {
  const double z = z_gamma(gamma);
  if (!(c_hat > 0.0) || !(n > 0.0)) throw Error(Errc::invalid_argument, "c_hat and n must be positive");
  const double phi = model.intensity(x, f_hat_value);
  if (!(phi > 0.0)) throw Error(Errc::undefined_interval, "phi(x, f_hat) = 0");
  ConfidenceInterval ci;
  ci.half_width = z * weights.kappa_norm / (n * c_hat * phi);
  ci.lower = std::max(0.0, f_hat_value - ci.half_width);
  ci.upper = f_hat_value + ci.half_width;
  return ci;
}

std::vector<Direction> default_grid(int d, std::size_t size) {
  if (size == 0) throw Error(Errc::invalid_argument, "grid size must be positive");
  std::vector<Direction> grid;
  grid.reserve(size);
  if (d == 2) {
    for (std::size_t i = 0; i < size; ++i)
      grid.push_back(Direction::planar(kTwoPi * static_cast<double>(i) / static_cast<double>(size)));
    return grid;
  }
  if (d == 3) {
    const auto bands = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(size) / 2.0))));
    const std::size_t sectors = std::max<std::size_t>(1, size / bands);
    for (std::size_t p = 0; p < bands; ++p) {
      const double x1 = kPi * (static_cast<double>(p) + 0.5) / static_cast<double>(bands);
      for (std::size_t a = 0; a < sectors; ++a)
        grid.push_back(Direction{x1, kTwoPi * static_cast<double>(a) / static_cast<double>(sectors)});
    }
    return grid;
  }
  throw Error(Errc::unsupported_dimension, "query grids support d in {2, 3}");
}

namespace {

std::vector<Direction> resolve_grid(int d, const EstimatorSettings& s) {
  if (s.queries.empty()) return default_grid(d, s.grid_size);
  std::vector<Direction> grid = s.queries;
  for (const auto& q : grid)
    if (q.dimension() != d) throw Error(Errc::invalid_argument, "query direction has the wrong dimension");
  std::stable_sort(grid.begin(), grid.end());
  return grid;
}

}  // namespace

EstimatorPlan::EstimatorPlan(int d, EstimatorSettings settings)
    : settings_(std::move(settings)),
      partition_(build_partition(settings_.k, d)),
      grid_(resolve_grid(d, settings_)),
      weights_(settings_.kernel, partition_, grid_) {
  z_gamma(settings_.gamma);  // validates gamma
}

EstimateResult EstimatorPlan::run(const PointSample& sample, const ProcessModel& model) const {
  const int d = partition_.dimension();
  if (sample.dimension() != d) throw Error(Errc::invalid_argument, "sample dimension does not match the plan");
  const auto& meta = sample.metadata();
  if (meta.n < 1) throw Error(Errc::invalid_argument, "sample metadata must carry n >= 1");
  const double n = meta.n;

  const CellSummary summary = cell_maxima(sample, partition_, model);
  const double c_hat = c_hat_global(summary, n);
  const auto coef = cell_coefficients(summary, partition_, c_hat, n);

  const std::size_t points = grid_.size();
  std::vector<double> g(points);
  simd::weighted_column_sums(weights_.data(), coef, g);

  EstimateResult res;
  res.grid = grid_;
  res.g_hat = g;
  res.f_hat.resize(points);
  res.ci_lower.resize(points);
  res.ci_upper.resize(points);
  res.ci_half_width.resize(points);
  res.clamped.assign(points, false);
  res.c_hat = c_hat;
  res.gamma = settings_.gamma;
  res.z_gamma = z_gamma(settings_.gamma);
  res.dimension = d;
  res.n = meta.n;
  res.k = settings_.k;
  res.order = settings_.kernel.order;
  res.kind = to_char(meta.kind);
  res.model_tag = model.tag();
  res.sample_size = sample.size();

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double kd = static_cast<double>(settings_.k);
  const double ell = settings_.kernel.harmonics();
  auto& norm = res.normalization;
  norm.v_n = ell > 0.0 ? n / std::sqrt(ell * kd) : nan;
  norm.clt_scale.resize(points);
  norm.polar_scale.assign(points, nan);
  norm.rate_scale.assign(points, nan);

  double max_abs_weight = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const auto x = std::span<const double>(grid_[i]);
    const bool clamped = g[i] < 0.0;
    res.clamped[i] = clamped;
    const double fh = model.quantile_inverse(x, clamped ? 0.0 : g[i]);
    res.f_hat[i] = fh;

    const double kn = weights_.norm(i);
    const double phi = model.intensity(x, fh);
    if (phi > 0.0 && kn > 0.0) {
      const double half = res.z_gamma * kn / (n * c_hat * phi);
      res.ci_half_width[i] = half;
      res.ci_lower[i] = std::max(0.0, fh - half);
      res.ci_upper[i] = fh + half;
      norm.clt_scale[i] = n * c_hat * phi / kn;
    } else {
      res.ci_half_width[i] = nan;
      res.ci_lower[i] = nan;
      res.ci_upper[i] = nan;
      norm.clt_scale[i] = nan;
    }
    if (model.kind() == ModelKind::polar) {
      norm.polar_scale[i] = n * c_hat * gamma_d(d) * std::pow(fh, d - 1) / weights_.asymptotic_norm(i);
      if (d == 2) norm.rate_scale[i] = norm.v_n * c_hat * fh;
    }
    if (kn > 0.0)
      for (std::size_t r = 0; r < partition_.size(); ++r)
        max_abs_weight = std::max(max_abs_weight, std::abs(weights_.kappa(r, i)) / kn);
  }

  auto& snap = res.snapshot;
  snap.min_count = *std::min_element(summary.counts.begin(), summary.counts.end());
  snap.max_count = *std::max_element(summary.counts.begin(), summary.counts.end());
  snap.mean_count = static_cast<double>(summary.total) / static_cast<double>(summary.cells());
  snap.nu_n = partition_.min_measure();
  snap.max_abs_weight = max_abs_weight;
  snap.clamped = static_cast<std::size_t>(std::count(res.clamped.begin(), res.clamped.end(), true));
  return res;
}

EstimateResult estimate_pipeline(const PointSample& sample, const ProcessModel& model,
                                 const EstimatorSettings& settings) {
  return EstimatorPlan(sample.dimension(), settings).run(sample, model);
}

EstimateResult estimate_pipeline(const PointSample& sample, const EstimatorSettings& settings) {
  return estimate_pipeline(sample, ProcessModel::polar(sample.dimension()), settings);
}

}  // namespace frontier
