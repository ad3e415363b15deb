// SPDX-License-Identifier: Apache-2.0
#include "frontier/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <ostream>
#include <thread>

#include "frontier/errors.hpp"
#include "frontier/estimate_io.hpp"
#include "frontier/quadrature.hpp"
#include "frontier/random.hpp"
#include "frontier/sample_io.hpp"
#include "frontier/simd/kernels.hpp"

namespace frontier {

const char* to_string(Schedule schedule) noexcept {
  return schedule == Schedule::manual ? "manual" : "corollary5";
}

Schedule parse_schedule(std::string_view text) {
  if (text == "manual") return Schedule::manual;
  if (text == "corollary5") return Schedule::corollary5;
  throw Error(Errc::invalid_argument, "unknown schedule '" + std::string(text) + "'");
}

ScheduleChoice corollary5_schedule(int n, double u) {
  if (n < 2) throw Error(Errc::invalid_argument, "the schedule needs n >= 2");
  if (!(u > 0.0)) throw Error(Errc::invalid_argument, "u must be positive");
  const double nd = n;
  ScheduleChoice s;
  s.ell = 2 * static_cast<int>(std::lround(std::pow(nd, 10.0 / 27.0) / 2.0));
  s.order = s.ell / 2;
  s.k = std::max(1, static_cast<int>(std::lround(std::pow(nd, 14.0 / 27.0) *
                                                 std::pow(std::log(nd), 2.0 / 7.0) * u * u)));
  return s;
}

ExperimentConfig ExperimentConfig::resolved() const {
  ExperimentConfig c = *this;
  if (c.reps < 1) throw Error(Errc::invalid_argument, "reps must be >= 1");
  if (c.n < 1) throw Error(Errc::invalid_argument, "n must be >= 1");
  if (c.grid_size < 2) throw Error(Errc::invalid_argument, "grid size must be >= 2");
  if (c.jobs < 1) throw Error(Errc::invalid_argument, "jobs must be >= 1");
  if (c.max_retries < 0) throw Error(Errc::invalid_argument, "max_retries must be >= 0");
  if (!(c.gamma > 0.0 && c.gamma < 1.0)) throw Error(Errc::invalid_argument, "gamma must lie in (0, 1)");
  if (c.schedule == Schedule::corollary5) {
    const auto s = corollary5_schedule(c.n, c.u);
    c.k = s.k;
    c.order = s.order;
  }
  if (c.k < 1) throw Error(Errc::invalid_argument, "k must be >= 1");
  if (c.order < 0) throw Error(Errc::invalid_argument, "m must be >= 0");
  for (double x : c.coverage_points)
    if (!(x >= 0.0 && x < kTwoPi)) throw Error(Errc::invalid_argument, "coverage points must lie in [0, 2 pi)");
  const auto f = FrontierFunction::parse(c.frontier);
  if (!c.c) c.c = 1.0 / integrate([&](double x) { return f(x); }, 0.0, kTwoPi);
  if (!(*c.c > 0.0)) throw Error(Errc::invalid_argument, "c must be positive");
  return c;
}

double l1_relative_error(std::span<const double> f_hat, const FrontierFunction& f,
                         std::span<const double> grid) {
  if (grid.size() < 2 || f_hat.size() != grid.size())
    throw Error(Errc::invalid_argument, "l1 error needs matching grids of at least 2 points");
  // Equal weights: the periodic trapezoid rule on a uniform grid.
  std::vector<double> truth(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) truth[i] = f(grid[i]);
  return simd::abs_diff_sum(f_hat, truth) / simd::sum(truth);
}

namespace {

struct Context {
  ExperimentConfig cfg;
  FrontierFunction f;
  ProcessModel model;
  EstimatorPlan plan;
  std::optional<EstimatorPlan> coverage_plan;
  std::vector<double> grid;
};

EstimatorSettings settings_for(const ExperimentConfig& c) {
  EstimatorSettings s;
  s.k = c.k;
  s.kernel = KernelSpec{c.order};
  s.grid_size = c.grid_size;
  s.gamma = c.gamma;
  return s;
}

Context make_context(const ExperimentConfig& cfg) {
  Context ctx{cfg, FrontierFunction::parse(cfg.frontier), ProcessModel::polar(2, *cfg.c),
              EstimatorPlan(2, settings_for(cfg)), std::nullopt, {}};
  if (!cfg.coverage_points.empty()) {
    auto s = settings_for(cfg);
    for (double x : cfg.coverage_points) s.queries.push_back(Direction::planar(x));
    ctx.coverage_plan.emplace(2, std::move(s));
  }
  for (const auto& x : ctx.plan.grid()) ctx.grid.push_back(x[0]);
  return ctx;
}

std::uint64_t attempt_seed(std::uint64_t seed, int rep, int attempt) {
  const std::uint64_t base = stream_seed(seed, static_cast<std::uint64_t>(rep));
  return attempt == 0 ? base : base ^ mix64(static_cast<std::uint64_t>(attempt));
}

PointSample draw(const Context& ctx, std::uint64_t seed) {
  return sample_star_support(ctx.f, ctx.cfg.n, *ctx.cfg.c, 2, ctx.cfg.kind, seed);
}

ReplicationRecord run_one(const Context& ctx, int rep) {
  ReplicationRecord rec;
  rec.rep = rep;
  for (int attempt = 0;; ++attempt) {
    const std::uint64_t seed = attempt_seed(ctx.cfg.seed, rep, attempt);
    const PointSample sample = draw(ctx, seed);
    try {
      const EstimateResult est = ctx.plan.run(sample, ctx.model);
      rec.seed = seed;
      rec.retries = attempt;
      rec.sample_size = sample.size();
      rec.clamped = est.snapshot.clamped;
      rec.c_hat = est.c_hat;
      rec.xi = l1_relative_error(est.f_hat, ctx.f, ctx.grid);
      if (ctx.coverage_plan) {
        const EstimateResult cov = ctx.coverage_plan->run(sample, ctx.model);
        // Queries are sorted by the plan; map back to the configured order.
        for (double x : ctx.cfg.coverage_points) {
          const auto& grid = ctx.coverage_plan->grid();
          const auto it = std::find_if(grid.begin(), grid.end(), [&](const Direction& d) { return d[0] == x; });
          const auto i = static_cast<std::size_t>(it - grid.begin());
          const double truth = ctx.f(x);
          rec.covered.push_back(std::isfinite(cov.ci_lower[i]) && cov.ci_lower[i] <= truth &&
                                truth <= cov.ci_upper[i]);
        }
      }
      return rec;
    } catch (const EmptyCellError&) {
      if (attempt >= ctx.cfg.max_retries) throw;
      rec.retried_seeds.push_back(seed);
    }
  }
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  const ExperimentConfig cfg = config.resolved();
  const Context ctx = make_context(cfg);

  std::vector<ReplicationRecord> records(static_cast<std::size_t>(cfg.reps));
  std::vector<std::exception_ptr> errors(records.size());
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < cfg.reps; r = next++) {
      try {
        records[static_cast<std::size_t>(r)] = run_one(ctx, r);
      } catch (...) {
        errors[static_cast<std::size_t>(r)] = std::current_exception();
      }
    }
  };
  const int threads = std::min(cfg.jobs, cfg.reps);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  ExperimentReport rep;
  rep.config = cfg;
  double total = 0.0;
  rep.xi_min = records.front().xi;
  rep.xi_max = records.front().xi;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const double xi = records[i].xi;
    total += xi;
    if (xi < rep.xi_min) {
      rep.xi_min = xi;
      rep.best = i;
    }
    if (xi > rep.xi_max) {
      rep.xi_max = xi;
      rep.worst = i;
    }
    rep.total_retries += static_cast<std::size_t>(records[i].retries);
  }
  rep.xi_mean = total / static_cast<double>(records.size());
  // Keep the mean inside [min, max] despite rounding.
  rep.xi_mean = std::clamp(rep.xi_mean, rep.xi_min, rep.xi_max);

  for (std::size_t p = 0; p < cfg.coverage_points.size(); ++p) {
    CoverageEntry e;
    e.x = cfg.coverage_points[p];
    e.total = records.size();
    for (const auto& r : records) e.hits += r.covered[p] ? 1 : 0;
    e.fraction = static_cast<double>(e.hits) / static_cast<double>(e.total);
    e.standard_error = std::sqrt(e.fraction * (1.0 - e.fraction) / static_cast<double>(e.total));
    rep.coverage.push_back(e);
  }
  rep.replications = std::move(records);
  return rep;
}

std::vector<CoverageEntry> coverage_study(ExperimentConfig config, std::vector<double> x_points) {
  config.coverage_points = std::move(x_points);
  return run_experiment(config).coverage;
}

ReplicationReplay replay(const ExperimentConfig& resolved, const ReplicationRecord& record) {
  const Context ctx = make_context(resolved.resolved());
  PointSample sample = draw(ctx, record.seed);
  EstimateResult est = ctx.plan.run(sample, ctx.model);
  return {std::move(sample), std::move(est)};
}

nlohmann::json experiment_to_json(const ExperimentReport& r) {
  const auto& c = r.config;
  nlohmann::json j;
  j["config"] = {{"reps", c.reps},
                 {"n", c.n},
                 {"k", c.k},
                 {"m", c.order},
                 {"l", 2 * c.order},
                 {"gamma", c.gamma},
                 {"grid_size", c.grid_size},
                 {"seed", c.seed},
                 {"frontier", c.frontier},
                 {"kind", std::string(1, to_char(c.kind))},
                 {"schedule", to_string(c.schedule)},
                 {"u", c.u},
                 {"c", c.c.value_or(0.0)},
                 {"max_retries", c.max_retries},
                 {"coverage_points", c.coverage_points}};
  j["xi_min"] = r.xi_min;
  j["xi_mean"] = r.xi_mean;
  j["xi_max"] = r.xi_max;
  j["best"] = r.best;
  j["worst"] = r.worst;
  j["total_retries"] = r.total_retries;
  const double ell = 2.0 * c.order;
  j["v_n"] = ell > 0.0 ? nlohmann::json(c.n / std::sqrt(ell * c.k)) : nlohmann::json(nullptr);
  auto reps = nlohmann::json::array();
  for (const auto& rec : r.replications) {
    nlohmann::json e = {{"rep", rec.rep},         {"xi_n", rec.xi},
                        {"retries", rec.retries}, {"seed", rec.seed},
                        {"retried_seeds", rec.retried_seeds},
                        {"sample_size", rec.sample_size},
                        {"clamped", rec.clamped}, {"c_hat", rec.c_hat}};
    if (!rec.covered.empty()) e["covered"] = rec.covered;
    reps.push_back(std::move(e));
  }
  j["replications"] = std::move(reps);
  auto cov = nlohmann::json::array();
  for (const auto& e : r.coverage)
    cov.push_back({{"x", e.x},
                   {"hits", e.hits},
                   {"total", e.total},
                   {"fraction", e.fraction},
                   {"standard_error", e.standard_error}});
  j["coverage"] = std::move(cov);
  return j;
}

void write_experiment_csv(std::ostream& out, const ExperimentReport& r) {
  out << "rep,xi_n,retries\n";
  for (const auto& rec : r.replications)
    out << rec.rep << ',' << format_number(rec.xi) << ',' << rec.retries << '\n';
}

void write_replication_csv(std::ostream& out, const EstimateResult& est, const FrontierFunction& f) {
  out << "x,f,f_hat,ci_lo,ci_hi\n";
  for (std::size_t i = 0; i < est.grid.size(); ++i) {
    const double x = est.grid[i][0];
    out << format_number(x) << ',' << format_number(f(x)) << ',' << format_number(est.f_hat[i]) << ','
        << format_number(est.ci_lower[i]) << ',' << format_number(est.ci_upper[i]) << '\n';
  }
}

namespace {

std::ofstream open_file(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path.string());
  return out;
}

std::filesystem::path with_suffix(std::filesystem::path p, const std::string& suffix) {
  p += suffix;
  return p;
}

}  // namespace

void save_experiment(const ExperimentReport& report, const std::filesystem::path& prefix) {
  if (prefix.has_parent_path()) std::filesystem::create_directories(prefix.parent_path());
  {
    auto out = open_file(with_suffix(prefix, ".json"));
    out << experiment_to_json(report).dump(2) << '\n';
  }
  {
    auto out = open_file(with_suffix(prefix, ".csv"));
    write_experiment_csv(out, report);
  }
  const auto f = FrontierFunction::parse(report.config.frontier);
  const std::pair<const char*, std::size_t> picks[] = {{"_best", report.best}, {"_worst", report.worst}};
  for (const auto& [label, index] : picks) {
    const auto rr = replay(report.config, report.replications[index]);
    auto out = open_file(with_suffix(prefix, std::string(label) + ".csv"));
    write_replication_csv(out, rr.estimate, f);
    save_sample(rr.sample, with_suffix(prefix, std::string(label) + "_sample"));
  }
}

}  // namespace frontier
