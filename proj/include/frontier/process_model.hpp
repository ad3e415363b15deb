// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "frontier/frontier_function.hpp"

namespace frontier {

enum class ModelKind { uniform, polar, custom };

const char* to_string(ModelKind kind) noexcept;

/// Bounds of a custom intensity over E x [0, radius_limit].
struct IntensityBounds {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

/// Mean measure n c phi(x, y) 1_S(x, y) nu(dx) dy, with nu(dx) = h_d(x) dx on
/// E = [0, pi)^(d-2) x [0, 2 pi).
///
/// The polar kind has phi(x, y) = gamma_d y^(d-1); the uniform kind has phi = 1. Both
/// have closed-form conditional quantile transforms. A custom intensity is integrated
/// numerically and inverted by bracketed root finding.
class ProcessModel {
 public:
  using Intensity = std::function<double(std::span<const double>, double)>;

  static ProcessModel polar(int d, double c = 1.0);
  static ProcessModel uniform(int d, double c = 1.0);
  /// `radius_limit` bounds the domain of phi in y; use infinity for an unbounded intensity.
  static ProcessModel custom(int d, double c, Intensity phi, IntensityBounds bounds,
                             double radius_limit = std::numeric_limits<double>::infinity());

  /// Extends phi beyond the frontier by clamping: phi(x, y) = phi(x, f(x)) for y > f(x).
  /// Only affects the custom kind; closed-form kinds are already defined for all y >= 0.
  ProcessModel with_extension(FrontierFunction frontier) const;

  int dimension() const noexcept { return d_; }
  double c() const noexcept { return c_; }
  ModelKind kind() const noexcept { return kind_; }
  std::string tag() const;

  double intensity(std::span<const double> x, double y) const;
  double base_density(std::span<const double> x) const;

  /// Phi_x(y) = int_0^y phi(x, t) dt.
  double quantile_forward(std::span<const double> x, double y) const;
  /// Phi_x^{-1}(u).
  double quantile_inverse(std::span<const double> x, double u) const;

  /// g(x) = Phi_x(f(x)) with bounds [Phi-image of m, Phi-image of M].
  FrontierFunction homogenized(const FrontierFunction& f) const;

 private:
  ProcessModel(int d, double c, ModelKind kind);

  double checked_intensity(std::span<const double> x, double y) const;
  double integrate_intensity(std::span<const double> x, double y) const;

  int d_;
  double c_;
  ModelKind kind_;
  double gamma_ = 1.0;
  std::shared_ptr<const Intensity> phi_;
  IntensityBounds bounds_;
  double radius_limit_ = std::numeric_limits<double>::infinity();
  std::optional<FrontierFunction> extension_;
};

double quantile_forward(const ProcessModel& model, std::span<const double> x, double y);
double quantile_inverse(const ProcessModel& model, std::span<const double> x, double u);
FrontierFunction homogenized_frontier(const ProcessModel& model, const FrontierFunction& f);

}  // namespace frontier
