// SPDX-License-Identifier: Apache-2.0
#include "frontier/polar.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "frontier/errors.hpp"
#include "frontier/quadrature.hpp"

namespace frontier {

bool is_canonical(std::span<const double> angles) noexcept {
  if (angles.empty()) return false;
  for (std::size_t j = 0; j + 1 < angles.size(); ++j)
    if (!(angles[j] >= 0.0 && angles[j] < kPi)) return false;
  const double last = angles.back();
  return last >= 0.0 && last < kTwoPi;
}

bool Direction::is_canonical() const noexcept { return frontier::is_canonical(angles_); }

namespace {

double compute_gamma(int d) {
  if (d == 2) return kTwoPi;
  if (d == 3) return 2.0 * kTwoPi;
  // The integrand factorises: gamma_d = 2 pi * prod_{j=1}^{d-2} int_0^pi sin^(d-1-j).
  QuadratureOptions options;
  options.rel_tol = 1e-13;
  double product = kTwoPi;
  for (int j = 1; j <= d - 2; ++j) {
    const int power = d - 1 - j;
    product *= integrate([power](double x) { return std::pow(std::sin(x), power); }, 0.0, kPi,
                         options);
  }
  return product;
}

}  // namespace

double gamma_d(int d) {
  if (d < 2) throw Error(Errc::invalid_dimension, "gamma_d requires d >= 2, got " + std::to_string(d));
  static std::mutex mutex;
  static std::map<int, double> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, compute_gamma(d)).first;
  return it->second;
}

double base_density(std::span<const double> angles) {
  const int d = static_cast<int>(angles.size()) + 1;
  double weight = 1.0;
  for (int j = 1; j <= d - 2; ++j) weight *= std::pow(std::sin(angles[j - 1]), d - 1 - j);
  return weight / gamma_d(d);
}

std::vector<double> polar_to_cartesian(std::span<const double> angles, double radius) {
  const std::size_t d = angles.size() + 1;
  std::vector<double> point(d);
  double sines = radius;
  for (std::size_t j = 0; j + 1 < d; ++j) {
    point[j] = sines * std::cos(angles[j]);
    sines *= std::sin(angles[j]);
  }
  point[d - 1] = sines;
  return point;
}

PolarPoint cartesian_to_polar(std::span<const double> point) {
  const std::size_t d = point.size();
  if (d < 2) throw Error(Errc::invalid_dimension, "cartesian_to_polar requires d >= 2");

  // tail[j] = |(p_j, ..., p_{d-1})|, accumulated from the end to avoid cancellation.
  std::vector<double> tail(d + 1, 0.0);
  for (std::size_t j = d; j-- > 0;) tail[j] = std::hypot(tail[j + 1], point[j]);
  const double radius = tail[0];
  if (radius == 0.0) throw Error(Errc::undefined_direction, "the origin has no direction");

  std::vector<double> angles(d - 1);
  for (std::size_t j = 0; j + 2 < d; ++j) {
    double a = std::atan2(tail[j + 1], point[j]);
    if (a >= kPi) a = std::nextafter(kPi, 0.0);
    angles[j] = a;
  }
  double azimuth = std::atan2(point[d - 1], point[d - 2]);
  if (azimuth < 0.0) azimuth += kTwoPi;
  if (azimuth >= kTwoPi) azimuth = 0.0;
  angles[d - 2] = azimuth;
  return {Direction(std::move(angles)), radius};
}

}  // namespace frontier
