// SPDX-License-Identifier: Apache-2.0
#include "frontier/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frontier/errors.hpp"
#include "frontier/sample.hpp"

namespace frontier {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ConditionEntry entry(std::string name, double x, double value, double threshold = 1.0) {
  return {std::move(name), x, value, threshold, std::isfinite(value) && value < threshold};
}

}  // namespace

DiagnosticsReport diagnostics_report(const KernelSpec& spec, const Partition& partition,
                                     const FrontierFunction& f, const ProcessModel& model, int n,
                                     const DiagnosticsOptions& options) {
  if (partition.dimension() != 2 || model.dimension() != 2)
    throw Error(Errc::unsupported_dimension, "diagnostics are available for d = 2");
  if (n < 1) throw Error(Errc::invalid_argument, "n must be >= 1");
  if (options.grid_per_cell == 0) throw Error(Errc::invalid_argument, "grid_per_cell must be positive");

  const std::size_t k = partition.size();
  const std::size_t per = options.grid_per_cell;
  const double nd = n;
  const double kd = static_cast<double>(k);
  const auto& cuts = partition.cuts(0);

  // Midpoint grid per cell, with f^d and g on it.
  std::vector<double> t(k * per), fd(k * per), g(k * per);
  for (std::size_t r = 0; r < k; ++r) {
    const double a = cuts[r];
    const double h = (cuts[r + 1] - a) / static_cast<double>(per);
    for (std::size_t j = 0; j < per; ++j) {
      const std::size_t i = r * per + j;
      t[i] = a + (static_cast<double>(j) + 0.5) * h;
      const double fx = f(t[i]);
      fd[i] = fx * fx;
      const double x[1] = {t[i]};
      g[i] = model.quantile_forward(x, fx);
    }
  }
  // nu-weight of a grid point within its cell.
  auto cell_weight = [&](std::size_t r) { return partition.measure(r) / static_cast<double>(per); };

  DiagnosticsReport rep;
  rep.n = n;
  rep.k = static_cast<int>(k);
  rep.order = spec.order;
  rep.frontier_tag = f.tag();
  rep.model_tag = model.tag();
  rep.grid_per_cell = per;
  rep.nu_n = partition.min_measure();
  rep.n_nu_over_log_n = n > 1 ? nd * rep.nu_n / std::log(nd) : std::numeric_limits<double>::infinity();

  std::vector<double> g_cell(k, 0.0);
  double g_total = 0.0;
  for (std::size_t r = 0; r < k; ++r) {
    const auto first = g.begin() + static_cast<std::ptrdiff_t>(r * per);
    const auto [gmin, gmax] = std::minmax_element(first, first + static_cast<std::ptrdiff_t>(per));
    rep.delta_n = std::max(rep.delta_n, partition.measure(r) * (*gmax - *gmin));
    const auto ffirst = fd.begin() + static_cast<std::ptrdiff_t>(r * per);
    const auto [fmin, fmax] = std::minmax_element(ffirst, ffirst + static_cast<std::ptrdiff_t>(per));
    rep.omega_n = std::max(rep.omega_n, *fmax - *fmin);
    for (std::size_t j = 0; j < per; ++j) g_cell[r] += g[r * per + j] * cell_weight(r);
    g_total += g_cell[r];
  }
  rep.expected_count = nd * model.c() * g_total;

  std::vector<WeightTable> tables;
  for (double x : options.x_points) {
    const double xs[1] = {x};
    tables.push_back(weight_table(spec, partition, xs));
    const auto& w = tables.back();

    PointDiagnostics p;
    p.x = x;
    std::vector<double> kv(k * per);
    for (std::size_t i = 0; i < kv.size(); ++i) kv[i] = kernel_eval(spec, x, t[i]);

    double smooth = 0.0, l1 = 0.0, l2 = 0.0, sup = std::abs(spec.diagonal()), xi_sum = 0.0;
    for (std::size_t r = 0; r < k; ++r) {
      const double wt = cell_weight(r);
      double kmin = kv[r * per], kmax = kv[r * per];
      for (std::size_t j = 0; j < per; ++j) {
        const std::size_t i = r * per + j;
        smooth += kv[i] * fd[i] * wt;
        l1 += std::abs(kv[i]) * wt;
        l2 += kv[i] * kv[i] * wt;
        sup = std::max(sup, std::abs(kv[i]));
        kmin = std::min(kmin, kv[i]);
        kmax = std::max(kmax, kv[i]);
        double inner = 0.0;
        for (std::size_t s = 0; s < per; ++s) inner += fd[r * per + s] - fd[i];
        xi_sum += kv[i] * inner * wt * wt;
      }
      p.gamma_max = std::max(p.gamma_max, kmax - kmin);
    }
    const double fx = f(x);
    p.psi = std::abs(smooth - fx * fx);
    p.xi = kd * std::abs(xi_sum);
    p.k_l1 = l1;
    p.k_l2 = std::sqrt(l2);
    p.k_sup = sup;
    p.kappa_norm = w.kappa_norm;
    p.kappa_over_n = w.kappa_norm / nd;
    for (std::size_t r = 0; r < k; ++r) {
      p.max_abs_w = std::max(p.max_abs_w, std::abs(w.w[r]));
      p.sum_w += w.w[r];
      p.smoothed_g += w.kappa[r] * g_cell[r];
    }
    const double xs1[1] = {x};
    p.g = model.quantile_forward(xs1, fx);
    rep.points.push_back(p);
  }

  const std::size_t q = tables.size();
  rep.weight_covariance.assign(q * q, 0.0);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      double s = 0.0;
      for (std::size_t r = 0; r < k; ++r) s += tables[a].w[r] * tables[b].w[r];
      rep.weight_covariance[a * q + b] = s;
    }

  // Global conditions.
  auto& c = rep.conditions;
  c.push_back(entry("H.1", kNaN, n > 1 ? std::log(nd) / (nd * rep.nu_n) : kNaN));
  c.push_back(entry("H.2", kNaN, nd * rep.delta_n));
  c.push_back(entry("K.1", kNaN, rep.points.empty() ? kNaN : rep.points.front().k_l1,
                    std::numeric_limits<double>::infinity()));
  const double spread = 1.0 / std::sqrt(rep.expected_count);
  c.push_back(entry("C.2", kNaN, spread));

  for (std::size_t a = 0; a < q; ++a) {
    const auto& p = rep.points[a];
    const double x = p.x;
    c.push_back(entry("H.3", x, rep.weight_covariance[a * q + a], std::numeric_limits<double>::infinity()));
    c.push_back(entry("H.4", x, p.max_abs_w));
    c.push_back(entry("H.5", x, std::abs(p.smoothed_g - p.g) / p.kappa_over_n));
    double sum_abs_w = 0.0;
    for (double w : tables[a].w) sum_abs_w += std::abs(w);
    c.push_back(entry("H.6", x, sum_abs_w * (nd * rep.delta_n) * (nd * rep.delta_n)));
    c.push_back(entry("H.7", x, p.kappa_over_n));

    // K.2 with x1 = x2 = x.
    double k2 = 0.0;
    const double xs[1] = {x};
    for (std::size_t r = 0; r < k; ++r) {
      const double a0 = cuts[r];
      const double h = (cuts[r + 1] - a0) / static_cast<double>(per);
      double kmin = std::numeric_limits<double>::infinity(), kmax = -kmin, abs_int = 0.0;
      for (std::size_t j = 0; j < per; ++j) {
        const double kv = kernel_eval(spec, xs[0], a0 + (static_cast<double>(j) + 0.5) * h);
        kmin = std::min(kmin, kv);
        kmax = std::max(kmax, kv);
        abs_int += std::abs(kv) * cell_weight(r);
      }
      k2 += (kmax - kmin) * abs_int;
    }
    c.push_back(entry("K.2", x, k2 / (p.k_l2 * p.k_l2)));
    c.push_back(entry("K.4", x, p.k_sup / (std::sqrt(kd) * p.k_l2)));
    c.push_back(entry("K.5", x, nd / std::sqrt(kd) / p.k_l2 * std::max(p.psi, p.xi)));
    c.push_back(entry("K.6", x, nd * std::pow(kd, -0.75) / std::sqrt(p.k_l2) * std::sqrt(p.k_l1) * rep.omega_n));
    c.push_back(entry("K.7", x, std::sqrt(kd) * p.k_l2 / nd));
    c.push_back(entry("C.1", x, std::abs(p.sum_w) * spread));
  }
  return rep;
}

nlohmann::json diagnostics_to_json(const DiagnosticsReport& r) {
  auto number = [](double v) -> nlohmann::json {
    if (!std::isfinite(v)) return nullptr;
    return v;
  };
  nlohmann::json j;
  j["settings"] = {{"n", r.n},
                   {"k", r.k},
                   {"m", r.order},
                   {"frontier", r.frontier_tag},
                   {"model", r.model_tag},
                   {"grid_per_cell", r.grid_per_cell}};
  j["delta_n"] = number(r.delta_n);
  j["omega_n"] = number(r.omega_n);
  j["nu_n"] = number(r.nu_n);
  j["n_nu_over_log_n"] = number(r.n_nu_over_log_n);
  j["expected_count"] = number(r.expected_count);
  auto points = nlohmann::json::array();
  for (const auto& p : r.points)
    points.push_back({{"x", p.x},
                      {"psi", number(p.psi)},
                      {"xi", number(p.xi)},
                      {"gamma_max", number(p.gamma_max)},
                      {"k_l1", number(p.k_l1)},
                      {"k_l2", number(p.k_l2)},
                      {"k_sup", number(p.k_sup)},
                      {"max_abs_w", number(p.max_abs_w)},
                      {"sum_w", number(p.sum_w)},
                      {"kappa_norm", number(p.kappa_norm)},
                      {"kappa_over_n", number(p.kappa_over_n)},
                      {"smoothed_g", number(p.smoothed_g)},
                      {"g", number(p.g)}});
  j["points"] = std::move(points);
  j["weight_covariance"] = r.weight_covariance;
  auto conditions = nlohmann::json::array();
  for (const auto& c : r.conditions)
    conditions.push_back({{"name", c.name},
                          {"x", number(c.x)},
                          {"value", number(c.value)},
                          {"threshold", number(c.threshold)},
                          {"satisfied", c.satisfied}});
  j["conditions"] = std::move(conditions);
  return j;
}

}  // namespace frontier
