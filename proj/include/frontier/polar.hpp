// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace frontier {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// A point of E = [0, pi)^(d-2) x [0, 2 pi): the d-1 polar angles of a direction in R^d.
class Direction {
 public:
  Direction() = default;
  explicit Direction(std::vector<double> angles) : angles_(std::move(angles)) {}
  Direction(std::initializer_list<double> angles) : angles_(angles) {}

  /// Planar direction (d = 2) from its single angle.
  static Direction planar(double angle) { return Direction{angle}; }

  std::size_t size() const noexcept { return angles_.size(); }
  int dimension() const noexcept { return static_cast<int>(angles_.size()) + 1; }
  double operator[](std::size_t i) const { return angles_[i]; }
  std::span<const double> angles() const noexcept { return angles_; }
  operator std::span<const double>() const noexcept { return angles_; }

  /// True when every angle lies in its canonical half-open interval.
  bool is_canonical() const noexcept;

  bool operator==(const Direction&) const = default;
  auto operator<=>(const Direction&) const = default;

 private:
  std::vector<double> angles_;
};

/// True when `angles` lie in E.
bool is_canonical(std::span<const double> angles) noexcept;

/// gamma_d = integral over E of prod_j (sin x_j)^(d-1-j), the surface area of the unit
/// sphere in R^d. Exact for d in {2, 3}; adaptive quadrature otherwise. Cached per d.
double gamma_d(int d);

/// Density h_d of the base measure nu on E with respect to Lebesgue measure.
double base_density(std::span<const double> angles);

/// P_d(x, y): polar angles and radius to a point of R^d.
std::vector<double> polar_to_cartesian(std::span<const double> angles, double radius);

struct PolarPoint {
  Direction direction;
  double radius = 0.0;
};

/// Inverse of P_d. Angles are returned in their canonical half-open intervals: the azimuth
/// wraps 2 pi to 0, and a polar angle that would equal pi is moved to the largest double
/// below pi. Throws Error(undefined_direction) for the origin.
PolarPoint cartesian_to_polar(std::span<const double> point);

}  // namespace frontier
