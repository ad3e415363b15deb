// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace frontier {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  // Gauss-Kronrod 31 with depth 6 needs at most 31 * 127 = 3937 evaluations.
  std::size_t max_evaluations = 4096;
};

/// Adaptive Gauss-Kronrod integral of `f` over [a, b].
///
/// Throws Error(quadrature_failure) when the evaluation budget is exhausted
/// or the requested relative tolerance is not reached within it.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options = {});

/// Iterated integral over the box [a0, b0) x [a1, b1); `f(x0, x1)`.
double integrate_2d(const std::function<double(double, double)>& f, double a0, double b0, double a1,
                    double b1, const QuadratureOptions& options = {});

}  // namespace frontier
