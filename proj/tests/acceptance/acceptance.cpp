// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit when any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "frontier/errors.hpp"
#include "frontier/estimator.hpp"
#include "frontier/experiment.hpp"
#include "frontier/kernel.hpp"
#include "frontier/sample.hpp"
#include "support/oracles.hpp"

using namespace frontier;

namespace {

int failures = 0;

void report(bool pass, const std::string& name, const std::string& detail) {
  std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void info(const std::string& name, const std::string& detail) {
  std::printf("INFO %s: %s\n", name.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void paper_experiment() {
  ExperimentConfig c;  // kind P, paper frontier, c = 1/int f, n = 100, k = 20, m = 7
  c.reps = 100;
  c.jobs = 1;
  const auto start = std::chrono::steady_clock::now();
  const auto r = run_experiment(c);
  const double t = seconds_since(start);
  const bool pass = r.xi_mean >= 0.042 && r.xi_mean <= 0.082 && r.xi_min <= 0.06 && r.xi_max <= 0.14 && t <= 60.0;
  report(pass, "paper-experiment",
         fmt("xi min/mean/max = %.2f%%/%.2f%%/%.2f%% (need mean in [4.2, 8.2], min <= 6, max <= 14); "
             "%zu empty-cell redraws; %.1f s single thread (need <= 60)",
             100 * r.xi_min, 100 * r.xi_mean, 100 * r.xi_max, r.total_retries, t));
  for (int m : {3, 5, 8}) {
    c.order = m;
    const auto s = run_experiment(c);
    info("paper-experiment", fmt("m = %d: xi min/mean/max = %.2f%%/%.2f%%/%.2f%%", m, 100 * s.xi_min,
                                 100 * s.xi_mean, 100 * s.xi_max));
  }
}

// One cell, uniform model: V* is the maximum of Poisson(mu) uniforms on [0, g].
void bias_oracle() {
  const int reps = 100000;
  const double g = 1.0;
  const auto f = FrontierFunction::constant(g);
  const auto p = build_partition(1, 2);
  const auto w = weight_table(KernelSpec{0}, p, Direction{1.0});
  for (double mu : {10.0, 50.0}) {
    const int n = 1000;
    const double c = mu / (n * g);  // mu = n c nu g with nu(E) = 1
    const auto model = ProcessModel::uniform(2, c);
    double gap = 0.0, gap2 = 0.0, bias = 0.0, bias2 = 0.0;
    int used = 0, empty = 0;
    for (int r = 0; r < reps; ++r) {
      const auto s = sample_process(model, f, n, ProcessKind::poisson, stream_seed(4242, static_cast<std::uint64_t>(r)));
      const auto cs = cell_maxima(s, p, model);
      const double d = g - cs.v_star[0];
      gap += d;
      gap2 += d * d;
      if (cs.counts[0] == 0) {
        ++empty;
        continue;
      }
      const double e = g_hat(cs, p, w, c_hat_global(cs, n), n) - g;
      bias += e;
      bias2 += e * e;
      ++used;
    }
    const double mean_gap = gap / reps;
    const double se_gap = std::sqrt((gap2 / reps - mean_gap * mean_gap) / reps);
    const double expected = (1.0 - std::exp(-mu)) / (n * c);
    const double mean_bias = bias / used;
    const double se_bias = std::sqrt((bias2 / used - mean_bias * mean_bias) / used);
    const bool pass = std::abs(mean_gap - expected) <= 3.0 * se_gap && std::abs(mean_bias) <= 3.0 * se_bias;
    report(pass, fmt("bias-oracle mu=%g", mu),
           fmt("E[g - V*] = %.6f vs %.6f (%.2f se); corrected bias %.2e (%.2f se, %d empty draws excluded)",
               mean_gap, expected, std::abs(mean_gap - expected) / se_gap, mean_bias,
               std::abs(mean_bias) / se_bias, empty));
  }
}

void kernel_exactness() {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  double worst_sum = 0.0, worst_norm = 0.0;
  bool diagonal = true;
  for (int i = 0; i < 100; ++i) {
    const double x = angle(gen);
    const int m = static_cast<int>(gen() % 33);
    const int k = 1 + static_cast<int>(gen() % 256);
    const KernelSpec spec{m};
    double total = 0.0;
    for (int r = 0; r < k; ++r)
      total += kernel_cell_integral(spec, x, kTwoPi * r / k, kTwoPi * (r + 1) / k);
    worst_sum = std::max(worst_sum, std::abs(total - 1.0));
    const double norm2 = oracle::integrate_panels([&](double t) { return std::pow(kernel_eval(spec, x, t), 2); }, 0.0,
                                                  2.0 * oracle::pi, 4 * m + 4) /
                         (2.0 * oracle::pi);
    worst_norm = std::max(worst_norm, std::abs(norm2 - (2.0 * m + 1.0)));
    diagonal = diagonal && kernel_eval(spec, x, x) == 2.0 * m + 1.0;
  }
  report(worst_sum <= 1e-12 && worst_norm <= 1e-9 && diagonal, "kernel-exactness",
         fmt("max |sum_r A_r - 1| = %.2e, max |norm^2 - (l+1)| = %.2e, K(x,x) = l+1 exactly: %s", worst_sum,
             worst_norm, diagonal ? "yes" : "no"));
}

void dual_path() {
  std::mt19937_64 gen(77);
  double worst = 0.0;
  int configs = 0, points = 0;
  for (int d : {2, 3}) {
    const auto model = ProcessModel::polar(d);
    const auto f = FrontierFunction::paper();
    const double c = 1.0 / star_volume(f, d);
    for (int i = 0; i < 500; ++i) {
      EstimatorSettings set;
      set.k = d == 2 ? 2 + static_cast<int>(gen() % 40) : std::vector<int>{4, 8, 12, 18}[gen() % 4];
      set.kernel = KernelSpec{static_cast<int>(gen() % (d == 2 ? 16 : 5))};
      set.grid_size = 16;
      const int n = 300 + static_cast<int>(gen() % 3000);
      EstimateResult r;
      for (std::uint64_t attempt = 0;; ++attempt) {
        try {
          r = estimate_pipeline(sample_star_support(f, n, c, d, ProcessKind::poisson, gen() ^ attempt), set);
          break;
        } catch (const EmptyCellError&) {
        }
      }
      ++configs;
      for (std::size_t q = 0; q < r.grid.size(); ++q) {
        if (r.clamped[q]) continue;
        const double back = model.quantile_forward(r.grid[q], r.f_hat[q]);
        worst = std::max(worst, std::abs(back - r.g_hat[q]) / std::max(1.0, std::abs(r.g_hat[q])));
        ++points;
      }
    }
  }
  report(worst <= 1e-10, "dual-path",
         fmt("%d configurations (d = 2 and 3), %d points: max |Phi_x(f_hat) - g_hat| = %.2e (need <= 1e-10)", configs,
             points, worst));
}

void equivariance() {
  const auto f = FrontierFunction::paper();
  double worst_scale = 0.0, worst_shift = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto s = sample_star_support(f, 3000, 1.0 / star_volume(f, 2), 2, ProcessKind::poisson, seed);
    EstimatorSettings set;
    set.grid_size = 256;
    EstimateResult base;
    try {
      base = estimate_pipeline(s, set);
    } catch (const EmptyCellError&) {
      continue;
    }
    for (double lambda : {0.1, 3.0}) {
      const auto r = estimate_pipeline(s.scaled(lambda), set);
      for (std::size_t i = 0; i < r.f_hat.size(); ++i)
        if (!base.clamped[i] && base.f_hat[i] > 0.0)
          worst_scale = std::max(worst_scale, std::abs(r.f_hat[i] / (lambda * base.f_hat[i]) - 1.0));
    }
    const double shift = kTwoPi / set.k;
    PointSample rotated(2, s.metadata());
    for (std::size_t i = 0; i < s.size(); ++i) {
      double a = s.direction(i)[0] + shift;
      if (a >= kTwoPi) a -= kTwoPi;
      rotated.add(std::vector<double>{a}, s.radius(i));
    }
    EstimatorSettings q0 = set, q1 = set;
    for (int i = 0; i < 50; ++i) {
      const double x = 0.05 + 0.11 * i;
      q0.queries.push_back(Direction{x});
      q1.queries.push_back(Direction{x + shift});
    }
    const auto a = estimate_pipeline(s, q0);
    const auto b = estimate_pipeline(rotated, q1);
    for (std::size_t i = 0; i < a.f_hat.size(); ++i)
      if (a.f_hat[i] > 0.0) worst_shift = std::max(worst_shift, std::abs(b.f_hat[i] / a.f_hat[i] - 1.0));
  }
  report(worst_scale <= 1e-10 && worst_shift <= 1e-12, "equivariance",
         fmt("max relative scaling error %.2e (need <= 1e-10), max one-cell shift error %.2e (need <= 1e-12)",
             worst_scale, worst_shift));
}

std::string coverage_line(const std::vector<CoverageEntry>& cov, bool& pass) {
  std::string out;
  pass = true;
  for (const auto& e : cov) {
    pass = pass && e.fraction >= 0.90 && e.fraction <= 0.99;
    out += fmt("x=%.4f: %.3f (se %.3f); ", e.x, e.fraction, e.standard_error);
  }
  return out;
}

void coverage() {
  ExperimentConfig c;
  c.n = 2000;
  c.k = 50;
  c.order = 10;
  c.gamma = 0.95;
  c.reps = 500;
  c.grid_size = 16;
  c.frontier = "constant:1";
  c.c = 1.0 / kPi;
  c.jobs = 1;
  const std::vector<double> x{0.0, kPi / 2.0, kPi};
  const auto start = std::chrono::steady_clock::now();
  const auto cov = coverage_study(c, x);
  const double t = seconds_since(start);
  bool pass = false;
  const auto line = coverage_line(cov, pass);
  report(pass && t <= 300.0, "ci-coverage", line + fmt("f = 1, c = 1/pi; %.1f s single thread (need <= 300)", t));

  c.frontier = "paper";
  c.c.reset();
  bool paper_pass = false;
  const auto paper_line = coverage_line(coverage_study(c, x), paper_pass);
  info("ci-coverage", paper_line + "f = 1 + exp(-cos 3x), c = 1/int f");
}

void simulator() {
  const auto f = FrontierFunction::constant(1.0);
  const auto s = sample_star_support(f, 100000, 1.0, 2, ProcessKind::empirical, 123);
  std::vector<double> observed(20, 0.0), expected(20, static_cast<double>(s.size()) / 20.0);
  std::vector<double> u;
  for (std::size_t i = 0; i < s.size(); ++i) {
    observed[std::min<std::size_t>(19, static_cast<std::size_t>(s.direction(i)[0] / (2.0 * oracle::pi) * 20.0))] += 1.0;
    u.push_back(s.radius(i) * s.radius(i));
  }
  const double chi = oracle::chi_square_pvalue(observed, expected);
  const double ks = oracle::ks_uniform_pvalue(u);
  report(chi > 0.01 && ks > 0.01, "simulator-law",
         fmt("%zu points: angle chi-square p = %.3f, KS of Y^2 p = %.3f (need both > 0.01)", s.size(), chi, ks));
}

void c_hat_consistency() {
  const auto f = FrontierFunction::constant(1.0);
  const double c = 1.0 / kPi;
  const auto p = build_partition(50, 2);
  const auto model = ProcessModel::polar(2);
  std::vector<double> err;
  for (int r = 0; r < 100; ++r) {
    const auto s = sample_star_support(f, 10000, c, 2, ProcessKind::poisson, stream_seed(99, static_cast<std::uint64_t>(r)));
    err.push_back(std::abs(c_hat_global(cell_maxima(s, p, model), 10000.0) / c - 1.0));
  }
  std::nth_element(err.begin(), err.begin() + 50, err.end());
  const double hi = err[50];
  const double lo = *std::max_element(err.begin(), err.begin() + 50);
  const double median = 0.5 * (lo + hi);
  report(median <= 0.05, "c-hat-consistency", fmt("median |c_hat/c - 1| = %.4f over 100 replications (need <= 0.05)", median));
}

void trend() {
  std::vector<double> means;
  std::string line;
  for (int n : {100, 400, 1600}) {
    ExperimentConfig c;
    c.n = n;
    c.schedule = Schedule::corollary5;
    c.u = 1.0;
    c.reps = 200;
    c.jobs = 4;
    const auto r = run_experiment(c);
    means.push_back(r.xi_mean);
    line += fmt("n=%d (k=%d, m=%d): %.2f%%; ", n, r.config.k, r.config.order, 100 * r.xi_mean);
  }
  report(means[0] > means[1] && means[1] > means[2], "trend", line + "need strictly decreasing");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> checks{
      {"paper-experiment", paper_experiment}, {"bias-oracle", bias_oracle}, {"kernel-exactness", kernel_exactness},
      {"dual-path", dual_path},               {"equivariance", equivariance}, {"ci-coverage", coverage},
      {"simulator-law", simulator},           {"c-hat-consistency", c_hat_consistency}, {"trend", trend},
  };
  for (const auto& [name, check] : checks) {
    try {
      check();
    } catch (const std::exception& e) {
      report(false, name, std::string("threw: ") + e.what());
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
