// SPDX-License-Identifier: Apache-2.0
#include "frontier/kernel.hpp"

#include <cmath>

#include "frontier/errors.hpp"
#include "frontier/simd/kernels.hpp"

namespace frontier {
namespace {

void require_order(const KernelSpec& spec) {
  if (spec.order < 0) throw Error(Errc::invalid_argument, "kernel order must be >= 0");
}

// out[i] = sum_{j=1}^{m} sin(j theta_i) / j
void sine_sums(std::span<const double> theta, int m, std::span<double> out) {
  std::vector<double> s(theta.size());
  std::vector<double> c(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    s[i] = std::sin(theta[i]);
    c[i] = std::cos(theta[i]);
  }
  simd::harmonic_sine_sum(s, c, m, out);
}

double dirichlet(int m, double delta) {
  const double c[1] = {std::cos(delta)};
  double out[1];
  simd::harmonic_cosine_sum(c, m, out);
  return 1.0 + 2.0 * out[0];
}

// P_0(u), ..., P_{count-1}(u)
std::vector<double> legendre(double u, int count) {
  std::vector<double> p(static_cast<std::size_t>(std::max(count, 2)));
  p[0] = 1.0;
  p[1] = u;
  for (int l = 1; l + 1 < count; ++l) p[l + 1] = ((2.0 * l + 1.0) * u * p[l] - l * p[l - 1]) / (l + 1.0);
  return p;
}

double polar_projection(int m, double x1, double t1) {
  const auto px = legendre(std::cos(x1), m + 1);
  const auto pt = legendre(std::cos(t1), m + 1);
  double total = 0.0;
  for (int l = 0; l <= m; ++l) total += (2.0 * l + 1.0) * px[l] * pt[l];
  return total;
}

// int_a^b polar_projection(m, x1, t) sin(t) / 2 dt, using
// int P_l = (P_{l+1} - P_{l-1}) / (2l + 1).
double polar_cell_factor(int m, double x1, double a, double b) {
  const double ca = std::cos(a);
  const double cb = std::cos(b);
  const auto px = legendre(std::cos(x1), m + 1);
  const auto pa = legendre(ca, m + 2);
  const auto pb = legendre(cb, m + 2);
  double total = 0.5 * (ca - cb);
  for (int l = 1; l <= m; ++l)
    total += 0.5 * px[l] * ((pa[l + 1] - pa[l - 1]) - (pb[l + 1] - pb[l - 1]));
  return total;
}

double diagonal_value(const KernelSpec& spec, std::span<const double> x) {
  if (x.size() == 1) return spec.diagonal();
  return polar_projection(spec.order, x[0], x[0]) * spec.diagonal();
}

}  // namespace

double kernel_eval(const KernelSpec& spec, double x, double t) {
  require_order(spec);
  return dirichlet(spec.order, x - t);
}

double kernel_eval(const KernelSpec& spec, std::span<const double> x, std::span<const double> t) {
  require_order(spec);
  if (x.size() != t.size()) throw Error(Errc::invalid_argument, "kernel arguments differ in dimension");
  if (x.size() == 1) return dirichlet(spec.order, x[0] - t[0]);
  if (x.size() == 2)
    return polar_projection(spec.order, x[0], t[0]) * dirichlet(spec.order, x[1] - t[1]);
  throw Error(Errc::unsupported_dimension, "kernels support d in {2, 3}");
}

double kernel_cell_integral(const KernelSpec& spec, double x, double a, double b) {
  require_order(spec);
  const double theta[2] = {x - a, x - b};
  double d[2];
  sine_sums(theta, spec.order, d);
  return (b - a) / kTwoPi + (d[0] - d[1]) / kPi;
}

double kernel_cell_measure(const KernelSpec& spec, const Partition& partition, std::size_t r,
                           std::span<const double> x) {
  require_order(spec);
  if (x.size() + 1 != static_cast<std::size_t>(partition.dimension()))
    throw Error(Errc::invalid_argument, "direction dimension does not match the partition");
  const std::size_t last = x.size() - 1;
  const auto [a, b] = partition.interval(r, last);
  double value = kernel_cell_integral(spec, x[last], a, b);
  if (x.size() == 2) {
    const auto [a1, b1] = partition.interval(r, 0);
    value *= polar_cell_factor(spec.order, x[0], a1, b1);
  }
  return value;
}

WeightMatrix::WeightMatrix(const KernelSpec& spec, const Partition& partition,
                           std::span<const Direction> queries)
    : cells_(partition.size()), points_(queries.size()) {
  require_order(spec);
  const int d = partition.dimension();
  for (const auto& q : queries)
    if (q.dimension() != d)
      throw Error(Errc::invalid_argument, "query direction dimension does not match the partition");

  data_.assign(cells_ * points_, 0.0);
  const double k = static_cast<double>(cells_);

  if (d == 2) {
    // kappa(r, i) = k [ (c_{r+1} - c_r)/(2 pi) + (D(x_i - c_r) - D(x_i - c_{r+1}))/pi ]
    const auto& cuts = partition.cuts(0);
    std::vector<double> theta(cuts.size() * points_);
    for (std::size_t j = 0; j < cuts.size(); ++j)
      for (std::size_t i = 0; i < points_; ++i) theta[j * points_ + i] = queries[i][0] - cuts[j];
    std::vector<double> sums(theta.size());
    sine_sums(theta, spec.order, sums);
    for (std::size_t r = 0; r < cells_; ++r) {
      const double width = (cuts[r + 1] - cuts[r]) / kTwoPi;
      for (std::size_t i = 0; i < points_; ++i) {
        const double cell = width + (sums[r * points_ + i] - sums[(r + 1) * points_ + i]) / kPi;
        data_[r * points_ + i] = k * cell;
      }
    }
  } else {
    for (std::size_t r = 0; r < cells_; ++r)
      for (std::size_t i = 0; i < points_; ++i)
        data_[r * points_ + i] = k * kernel_cell_measure(spec, partition, r, queries[i]);
  }

  norms_.assign(points_, 0.0);
  for (std::size_t r = 0; r < cells_; ++r)
    for (std::size_t i = 0; i < points_; ++i) norms_[i] += data_[r * points_ + i] * data_[r * points_ + i];
  asymptotic_.resize(points_);
  for (std::size_t i = 0; i < points_; ++i) {
    norms_[i] = std::sqrt(norms_[i]);
    asymptotic_[i] = std::sqrt(k * diagonal_value(spec, queries[i]));
  }
}

WeightTable WeightMatrix::table(std::size_t i) const {
  WeightTable t;
  t.kappa.resize(cells_);
  for (std::size_t r = 0; r < cells_; ++r) t.kappa[r] = kappa(r, i);
  t.kappa_norm = norms_[i];
  t.asymptotic_norm = asymptotic_[i];
  if (!(t.kappa_norm > 0.0)) throw Error(Errc::degenerate_weights, "kappa_n(x) = 0");
  t.w.resize(cells_);
  for (std::size_t r = 0; r < cells_; ++r) t.w[r] = t.kappa[r] / t.kappa_norm;
  return t;
}

WeightTable weight_table(const KernelSpec& spec, const Partition& partition,
                         std::span<const double> x) {
  const Direction query{std::vector<double>(x.begin(), x.end())};
  return WeightMatrix(spec, partition, std::span<const Direction>(&query, 1)).table(0);
}

}  // namespace frontier
