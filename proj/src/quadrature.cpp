// SPDX-License-Identifier: Apache-2.0
#include "frontier/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>

#include "frontier/errors.hpp"

namespace frontier {
namespace {

constexpr std::size_t kPoints = 31;

unsigned depth_for_budget(std::size_t budget) {
  // A depth-k adaptive GK run evaluates at most kPoints * (2^(k+1) - 1) points.
  unsigned depth = 0;
  while (depth < 30 && kPoints * ((std::size_t{1} << (depth + 2)) - 1) <= budget) ++depth;
  return depth;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options) {
  if (a == b) return 0.0;
  if (options.max_evaluations < kPoints)
    throw Error(Errc::invalid_argument, "quadrature budget below one Gauss-Kronrod panel");

  std::size_t evaluations = 0;
  auto counted = [&](double x) {
    if (++evaluations > options.max_evaluations)
      throw Error(Errc::quadrature_failure, "evaluation budget exhausted");
    return f(x);
  };

  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, kPoints>::integrate(
      counted, a, b, depth_for_budget(options.max_evaluations), options.rel_tol, &error, &l1);
  if (!std::isfinite(value))
    throw Error(Errc::quadrature_failure, "non-finite integral");
  const double scale = std::max(std::abs(value), std::numeric_limits<double>::min());
  // Boost 1.74 reports panel errors on the reference interval [-1, 1]; scaling by the
  // half-width of [a, b] bounds the error on every subpanel.
  error *= std::abs(b - a) / 2.0;
  // The estimate (difference to the embedded Gauss rule) is pessimistic, so allow a small
  // factor above the requested tolerance before declaring failure.
  if (error > 100.0 * options.rel_tol * std::max(scale, l1) && error > 1e-300)
    throw Error(Errc::quadrature_failure, "tolerance not reached within budget");
  return value;
}

double integrate_2d(const std::function<double(double, double)>& f, double a0, double b0, double a1,
                    double b1, const QuadratureOptions& options) {
  return integrate(
      [&](double x0) {
        return integrate([&](double x1) { return f(x0, x1); }, a1, b1, options);
      },
      a0, b0, options);
}

}  // namespace frontier
