// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frontier {

/// Boundary radius as a function of direction, with declared bounds 0 < m <= f <= M.
///
/// Built-in frontiers depend only on the azimuth (the last angle), so they can be used
/// in any dimension.
class FrontierFunction {
 public:
  using Eval = std::function<double(std::span<const double>)>;

  FrontierFunction(Eval eval, double lower_bound, double upper_bound, std::string tag,
                   std::string smoothness = {});

  /// Throws Error(frontier_evaluation) on a non-finite value or one outside [m, M].
  double operator()(std::span<const double> angles) const;
  double operator()(double azimuth) const;

  double lower_bound() const noexcept { return lower_; }
  double upper_bound() const noexcept { return upper_; }
  const std::string& tag() const noexcept { return tag_; }
  const std::string& smoothness() const noexcept { return smoothness_; }

  /// f(x) = 1 + exp(-cos 3x), the pi/3-periodic test frontier.
  static FrontierFunction paper();
  static FrontierFunction constant(double value);
  /// f(x) = a0 + sum_j a_j cos(jx) + b_j sin(jx), coefficients ordered a0, a1, b1, a2, b2, ...
  static FrontierFunction fourier(std::vector<double> coefficients);

  /// Parses "paper", "constant:<v>" or "fourier:<a0,a1,b1,...>".
  static FrontierFunction parse(std::string_view spec);

  /// Returns a frontier scaled by `factor` (bounds and values).
  FrontierFunction scaled(double factor) const;

 private:
  Eval eval_;
  double lower_;
  double upper_;
  std::string tag_;
  std::string smoothness_;
};

}  // namespace frontier
