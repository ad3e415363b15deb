// SPDX-License-Identifier: Apache-2.0
#include "frontier/process_model.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>

#include "frontier/errors.hpp"
#include "frontier/polar.hpp"
#include "frontier/quadrature.hpp"

namespace frontier {

const char* to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::uniform: return "uniform";
    case ModelKind::polar: return "polar";
    case ModelKind::custom: return "custom";
  }
  return "unknown";
}

ProcessModel::ProcessModel(int d, double c, ModelKind kind) : d_(d), c_(c), kind_(kind) {
  if (d < 2) throw Error(Errc::invalid_dimension, "process model requires d >= 2");
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(Errc::invalid_argument, "c must be positive");
  gamma_ = gamma_d(d);
}

ProcessModel ProcessModel::polar(int d, double c) { return ProcessModel(d, c, ModelKind::polar); }

ProcessModel ProcessModel::uniform(int d, double c) {
  return ProcessModel(d, c, ModelKind::uniform);
}

ProcessModel ProcessModel::custom(int d, double c, Intensity phi, IntensityBounds bounds,
                                  double radius_limit) {
  if (!phi) throw Error(Errc::invalid_argument, "custom model needs an intensity");
  if (!(bounds.lower >= 0.0) || !(bounds.upper >= bounds.lower))
    throw Error(Errc::invalid_argument, "intensity bounds must satisfy 0 <= lower <= upper");
  if (!(radius_limit > 0.0)) throw Error(Errc::invalid_argument, "radius limit must be positive");
  ProcessModel model(d, c, ModelKind::custom);
  model.phi_ = std::make_shared<const Intensity>(std::move(phi));
  model.bounds_ = bounds;
  model.radius_limit_ = radius_limit;
  return model;
}

ProcessModel ProcessModel::with_extension(FrontierFunction frontier) const {
  ProcessModel copy = *this;
  copy.extension_ = std::move(frontier);
  return copy;
}

std::string ProcessModel::tag() const {
  return std::string(to_string(kind_)) + "-d" + std::to_string(d_);
}

double ProcessModel::base_density(std::span<const double> x) const {
  return frontier::base_density(x);
}

double ProcessModel::checked_intensity(std::span<const double> x, double y) const {
  const double value = (*phi_)(x, y);
  if (!(value >= 0.0) || !std::isfinite(value))
    throw Error(Errc::invalid_intensity, "custom intensity is negative or non-finite");
  return value;
}

double ProcessModel::intensity(std::span<const double> x, double y) const {
  switch (kind_) {
    case ModelKind::uniform: return 1.0;
    case ModelKind::polar: return gamma_ * std::pow(y, d_ - 1);
    case ModelKind::custom:
      if (extension_) {
        const double edge = (*extension_)(x);
        if (y > edge) return checked_intensity(x, edge);
      }
      return checked_intensity(x, y);
  }
  return 0.0;
}

double ProcessModel::integrate_intensity(std::span<const double> x, double y) const {
  QuadratureOptions options;
  options.rel_tol = 1e-11;
  return integrate([&](double t) { return checked_intensity(x, t); }, 0.0, y, options);
}

double ProcessModel::quantile_forward(std::span<const double> x, double y) const {
  if (!(y >= 0.0)) throw Error(Errc::invalid_argument, "quantile_forward requires y >= 0");
  switch (kind_) {
    case ModelKind::uniform: return y;
    case ModelKind::polar: return gamma_ * std::pow(y, d_) / d_;
    case ModelKind::custom: {
      if (extension_) {
        const double edge = (*extension_)(x);
        if (y > edge) return integrate_intensity(x, edge) + checked_intensity(x, edge) * (y - edge);
      }
      if (y > radius_limit_)
        throw Error(Errc::out_of_range, "radius beyond the custom intensity's domain");
      return integrate_intensity(x, y);
    }
  }
  return 0.0;
}

double ProcessModel::quantile_inverse(std::span<const double> x, double u) const {
  if (!(u >= 0.0)) throw Error(Errc::invalid_argument, "quantile_inverse requires u >= 0");
  if (u == 0.0) return 0.0;
  switch (kind_) {
    case ModelKind::uniform: return u;
    case ModelKind::polar: return std::pow(d_ * u / gamma_, 1.0 / d_);
    case ModelKind::custom: break;
  }

  auto residual = [&](double y) { return quantile_forward(x, y) - u; };
  // The extension continues Phi_x linearly past the frontier, so only a bare custom
  // intensity is limited to its declared radius domain.
  const double limit = extension_ ? std::numeric_limits<double>::infinity() : radius_limit_;
  double hi = extension_ ? (*extension_)(x) : 1.0;
  hi = std::min(hi, limit);
  int doublings = 0;
  while (residual(hi) < 0.0) {
    if (hi >= limit || doublings++ > 200)
      throw Error(Errc::out_of_range, "u exceeds the range of Phi_x");
    hi = std::min(2.0 * hi, limit);
  }
  std::uintmax_t max_iter = 200;
  auto tolerance = [](double a, double b) { return std::abs(b - a) <= 1e-13 * std::max(1.0, std::abs(b)); };
  const auto [lo_root, hi_root] =
      boost::math::tools::toms748_solve(residual, 0.0, hi, -u, residual(hi), tolerance, max_iter);
  return 0.5 * (lo_root + hi_root);
}

FrontierFunction ProcessModel::homogenized(const FrontierFunction& f) const {
  const double m = f.lower_bound();
  const double M = f.upper_bound();
  double lower = 0.0;
  double upper = 0.0;
  switch (kind_) {
    case ModelKind::uniform:
      lower = m;
      upper = M;
      break;
    case ModelKind::polar:
      lower = gamma_ * std::pow(m, d_) / d_;
      upper = gamma_ * std::pow(M, d_) / d_;
      break;
    case ModelKind::custom:
      if (!(bounds_.lower > 0.0) || !std::isfinite(bounds_.upper))
        throw Error(Errc::invalid_argument,
                    "homogenizing a custom model needs finite positive intensity bounds");
      lower = bounds_.lower * m;
      upper = bounds_.upper * M;
      break;
  }
  // Closed-form images are exact up to rounding; widen by a few ulps for the bound check.
  lower *= 1.0 - 1e-14;
  upper *= 1.0 + 1e-14;
  return FrontierFunction(
      [model = *this, f](std::span<const double> x) { return model.quantile_forward(x, f(x)); },
      lower, upper, "homogenized(" + f.tag() + "," + tag() + ")", f.smoothness());
}

double quantile_forward(const ProcessModel& model, std::span<const double> x, double y) {
  return model.quantile_forward(x, y);
}

double quantile_inverse(const ProcessModel& model, std::span<const double> x, double u) {
  return model.quantile_inverse(x, u);
}

FrontierFunction homogenized_frontier(const ProcessModel& model, const FrontierFunction& f) {
  return model.homogenized(f);
}

}  // namespace frontier
