// SPDX-License-Identifier: Apache-2.0
//
// frontier: simulate, estimate, experiment and diagnose from the command line.
//
// Exit codes: 0 success, 1 runtime or statistical failure, 2 usage error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "frontier/diagnostics.hpp"
#include "frontier/errors.hpp"
#include "frontier/estimate_io.hpp"
#include "frontier/estimator.hpp"
#include "frontier/experiment.hpp"
#include "frontier/frontier_function.hpp"
#include "frontier/partition.hpp"
#include "frontier/polar.hpp"
#include "frontier/process_model.hpp"
#include "frontier/quadrature.hpp"
#include "frontier/sample.hpp"
#include "frontier/sample_io.hpp"

namespace fs = std::filesystem;
using namespace frontier;

namespace {

constexpr int kRuntimeFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::uint64_t seed = 2007;
  std::string out;
  std::string format = "csv";
};

struct SimulateArgs {
  std::string frontier = "paper";
  int n = 100;
  std::optional<double> c;
  std::string kind = "P";
  int d = 2;
};

struct EstimateArgs {
  std::string sample;
  int k = 20;
  int m = 7;
  double gamma = 0.95;
  std::size_t grid = 1024;
  std::vector<double> x;
  std::optional<int> n;
};

struct ExperimentArgs {
  std::string preset = "paper-2007";
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> m;
  double gamma = 0.95;
  std::size_t grid = 1024;
  int reps = 100;
  int jobs = 1;
  double u = 1.0;
  std::string frontier = "paper";
  std::string kind = "P";
  std::optional<double> c;
  std::vector<double> coverage;
  int max_retries = 10;
};

struct DiagnoseArgs {
  std::string frontier;
  int k = 0;
  int m = 0;
  int n = 0;
  std::optional<double> c;
  std::vector<double> x;
  std::size_t grid_per_cell = 64;
};

std::string frontier_check(const std::string& tag) {
  try {
    FrontierFunction::parse(tag);
    return {};
  } catch (const std::exception& e) {
    return e.what();
  }
}

fs::path output_dir(const Global& g) {
  if (!g.out.empty()) return g.out;
  if (const char* env = std::getenv("FRONTIER_OUTPUT_DIR"); env && *env) return env;
  return ".";
}

void print_config(const nlohmann::json& config) {
  std::cout << "config:\n";
  for (const auto& [key, value] : config.items()) std::cout << "  " << key << " = " << value.dump() << '\n';
}

double default_c(const FrontierFunction& f, int d) {
  if (d == 2) return 1.0 / integrate([&](double x) { return f(x); }, 0.0, kTwoPi);
  return 1.0 / star_volume(f, d);
}

int cmd_simulate(const Global& g, const SimulateArgs& a) {
  const auto f = FrontierFunction::parse(a.frontier);
  const auto kind = parse_process_kind(a.kind);
  const double c = a.c ? *a.c : default_c(f, a.d);
  const fs::path prefix = output_dir(g) / "sample";
  print_config({{"command", "simulate"}, {"frontier", a.frontier}, {"n", a.n}, {"c", c},
                {"kind", a.kind}, {"d", a.d}, {"seed", g.seed}, {"out", prefix.string()},
                {"format", g.format}});
  const PointSample sample = sample_star_support(f, a.n, c, a.d, kind, g.seed);
  fs::create_directories(prefix.parent_path());
  save_sample(sample, prefix);
  std::cout << "points: " << sample.size() << '\n'
            << "wrote: " << prefix.string() << ".csv, " << prefix.string() << ".json\n";
  return 0;
}

int cmd_estimate(const Global& g, const EstimateArgs& a) {
  bool sidecar = false;
  PointSample sample = load_sample(a.sample, &sidecar);
  if (a.n) sample.metadata().n = *a.n;
  if (sample.metadata().n < 1) throw UsageError("the sample has no JSON sidecar; pass --n");

  EstimatorSettings s;
  s.k = a.k;
  s.kernel = KernelSpec{a.m};
  s.grid_size = a.grid;
  s.gamma = a.gamma;
  if (!a.x.empty()) {
    if (sample.dimension() != 2) throw UsageError("--x is only available for d = 2 samples");
    for (double x : a.x) s.queries.push_back(Direction::planar(x));
  }
  const fs::path prefix = output_dir(g) / "estimate";
  print_config({{"command", "estimate"}, {"sample", a.sample}, {"n", sample.metadata().n},
                {"k", a.k}, {"m", a.m}, {"gamma", a.gamma}, {"grid", a.x.empty() ? a.grid : a.x.size()},
                {"d", sample.dimension()}, {"out", prefix.string()}, {"format", g.format}});

  EstimateResult result;
  try {
    result = estimate_pipeline(sample, s);
  } catch (const EmptyCellError& e) {
    std::cerr << "error: " << e.empty_cells() << " of " << e.total_cells()
              << " cells are empty; lower --k (k_n) so every cell holds a point\n";
    return kRuntimeFailure;
  }
  fs::create_directories(prefix.parent_path());
  if (g.format == "csv") {
    save_estimate(result, prefix);
  } else {
    std::ofstream out(fs::path(prefix.string() + ".json"));
    out << estimate_to_json(result).dump(2) << '\n';
  }
  std::cout << std::setprecision(10) << "c_hat: " << result.c_hat << '\n'
            << "mean_ci_width: " << mean_ci_width(result) << '\n';
  if (result.snapshot.clamped > 0)
    std::cout << "warning: " << result.snapshot.clamped << " grid points had negative g_hat (clamped to 0)\n";
  return 0;
}

int cmd_experiment(const Global& g, const ExperimentArgs& a) {
  ExperimentConfig cfg;
  if (a.preset == "corollary5") cfg.schedule = Schedule::corollary5;
  if (a.n) cfg.n = *a.n;
  if (a.k) cfg.k = *a.k;
  if (a.m) cfg.order = *a.m;
  cfg.gamma = a.gamma;
  cfg.grid_size = a.grid;
  cfg.reps = a.reps;
  cfg.jobs = a.jobs;
  cfg.u = a.u;
  cfg.frontier = a.frontier;
  cfg.kind = parse_process_kind(a.kind);
  cfg.c = a.c;
  cfg.coverage_points = a.coverage;
  cfg.max_retries = a.max_retries;
  cfg.seed = g.seed;
  const ExperimentConfig r = cfg.resolved();
  const fs::path prefix = output_dir(g) / "experiment";
  print_config({{"command", "experiment"}, {"preset", a.preset}, {"schedule", to_string(r.schedule)},
                {"n", r.n}, {"k", r.k}, {"m", r.order}, {"l", 2 * r.order}, {"u", r.u},
                {"gamma", r.gamma}, {"grid", r.grid_size}, {"reps", r.reps}, {"jobs", r.jobs},
                {"frontier", r.frontier}, {"kind", a.kind}, {"c", *r.c},
                {"coverage", r.coverage_points}, {"max_retries", r.max_retries},
                {"seed", r.seed}, {"out", prefix.string()}, {"format", g.format}});

  const auto start = std::chrono::steady_clock::now();
  const ExperimentReport report = run_experiment(r);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  fs::create_directories(prefix.parent_path());
  if (g.format == "csv") {
    save_experiment(report, prefix);
  } else {
    std::ofstream out(fs::path(prefix.string() + ".json"));
    out << experiment_to_json(report).dump(2) << '\n';
  }
  std::cout << std::fixed << std::setprecision(4) << "xi_min: " << 100.0 * report.xi_min << "%\n"
            << "xi_mean: " << 100.0 * report.xi_mean << "%\n"
            << "xi_max: " << 100.0 * report.xi_max << "%\n"
            << "best: " << report.best << "  worst: " << report.worst
            << "  retries: " << report.total_retries << '\n';
  for (const auto& e : report.coverage)
    std::cout << "coverage x=" << e.x << ": " << e.fraction << " (se " << e.standard_error << ")\n";
  std::cout << std::setprecision(2) << "elapsed: " << seconds << " s\n";
  return 0;
}

int cmd_diagnose(const Global& g, const DiagnoseArgs& a) {
  const auto f = FrontierFunction::parse(a.frontier);
  const double c = a.c ? *a.c : default_c(f, 2);
  DiagnosticsOptions opt;
  opt.grid_per_cell = a.grid_per_cell;
  if (!a.x.empty()) opt.x_points = a.x;
  const fs::path prefix = output_dir(g) / "diagnostics";
  print_config({{"command", "diagnose"}, {"frontier", a.frontier}, {"n", a.n}, {"k", a.k},
                {"m", a.m}, {"c", c}, {"x", opt.x_points}, {"grid_per_cell", a.grid_per_cell},
                {"out", prefix.string()}, {"format", g.format}});

  const auto report = diagnostics_report(KernelSpec{a.m}, build_partition(a.k, 2), f,
                                         ProcessModel::polar(2, c), a.n, opt);
  fs::create_directories(prefix.parent_path());
  {
    std::ofstream out(fs::path(prefix.string() + ".json"));
    out << diagnostics_to_json(report).dump(2) << '\n';
  }
  if (g.format == "csv") {
    std::ofstream out(fs::path(prefix.string() + ".csv"));
    out << "name,x,value,threshold,satisfied\n";
    for (const auto& e : report.conditions)
      out << e.name << ',' << format_number(e.x) << ',' << format_number(e.value) << ','
          << format_number(e.threshold) << ',' << (e.satisfied ? "true" : "false") << '\n';
  }

  std::cout << std::setprecision(6) << "delta_n = " << report.delta_n << "  omega_n = " << report.omega_n
            << "  n nu_n / log n = " << report.n_nu_over_log_n << '\n';
  for (const auto& p : report.points)
    std::cout << "x = " << p.x << ": Psi_n = " << p.psi << "  Xi_n = " << p.xi
              << "  max Gamma = " << p.gamma_max << "  ||K||_2 = " << p.k_l2 << '\n';
  std::cout << std::left << std::setw(6) << "cond" << std::setw(12) << "x" << std::setw(16) << "value"
            << std::setw(12) << "threshold" << "ok\n";
  for (const auto& e : report.conditions) {
    std::cout << std::setw(6) << e.name << std::setw(12);
    if (std::isnan(e.x)) {
      std::cout << "-";
    } else {
      std::cout << e.x;
    }
    std::cout << std::setw(16) << e.value << std::setw(12) << e.threshold << (e.satisfied ? "yes" : "no") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frontier estimation: simulate, estimate, experiment, diagnose"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Key-value config file (TOML/INI); command-line flags take precedence");
  app.allow_config_extras(false);

  Global g;
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--out", g.out, "Output directory (default: $FRONTIER_OUTPUT_DIR or .)");
  app.add_option("--format", g.format, "Output files: csv (CSV + JSON) or json (JSON only)")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  const auto frontier_validator = CLI::Validator(frontier_check, "FRONTIER", "frontier tag");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Draw a point sample on a star-shaped support");
  simulate->add_option("--frontier", sim.frontier, "paper | constant:<v> | fourier:<a0,a1,b1,...>")
      ->check(frontier_validator)
      ->capture_default_str();
  simulate->add_option("--n", sim.n, "Intensity index n")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--c", sim.c, "Intensity constant (default 1/int f for d=2, 1/vol for d=3)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--kind", sim.kind, "P (Poisson) or E (empirical)")
      ->check(CLI::IsMember({"P", "E"}))
      ->capture_default_str();
  simulate->add_option("--d", sim.d, "Dimension (2 or 3)")->check(CLI::IsMember({2, 3}))->capture_default_str();

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "Estimate the frontier from a sample CSV");
  estimate->add_option("--sample", est.sample, "Sample CSV (JSON sidecar read when present)")->required();
  estimate->add_option("--k", est.k, "Number of cells k_n")->check(CLI::PositiveNumber)->capture_default_str();
  estimate->add_option("--m", est.m, "Kernel order m (l_n = 2m)")->check(CLI::NonNegativeNumber)->capture_default_str();
  estimate->add_option("--gamma", est.gamma, "Confidence level")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  estimate->add_option("--grid", est.grid, "Grid size")->check(CLI::PositiveNumber)->capture_default_str();
  estimate->add_option("--x", est.x, "Query angles instead of the grid (d=2)")->check(CLI::Range(0.0, kTwoPi));
  estimate->add_option("--n", est.n, "Intensity index n when the sample has no sidecar")->check(CLI::PositiveNumber);

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo study of the relative L1 error");
  experiment->add_option("--preset", exp.preset, "paper-2007 or corollary5")
      ->check(CLI::IsMember({"paper-2007", "corollary5"}))
      ->capture_default_str();
  experiment->add_option("--n", exp.n, "Intensity index n (default 100)")->check(CLI::PositiveNumber);
  experiment->add_option("--k", exp.k, "Number of cells (default 20; set by corollary5)")->check(CLI::PositiveNumber);
  experiment->add_option("--m", exp.m, "Kernel order (default 7; set by corollary5)")->check(CLI::NonNegativeNumber);
  experiment->add_option("--gamma", exp.gamma, "Confidence level")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  experiment->add_option("--grid", exp.grid, "Grid size for xi_n")->check(CLI::Range(2, 1 << 24))->capture_default_str();
  experiment->add_option("--reps", exp.reps, "Replications")->check(CLI::PositiveNumber)->capture_default_str();
  experiment->add_option("--jobs", exp.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  experiment->add_option("--u", exp.u, "u_n factor of the corollary5 schedule")->check(CLI::PositiveNumber)->capture_default_str();
  experiment->add_option("--frontier", exp.frontier, "Frontier tag")->check(frontier_validator)->capture_default_str();
  experiment->add_option("--kind", exp.kind, "P or E")->check(CLI::IsMember({"P", "E"}))->capture_default_str();
  experiment->add_option("--c", exp.c, "Intensity constant (default 1/int f)")->check(CLI::PositiveNumber);
  experiment->add_option("--coverage", exp.coverage, "Angles at which CI coverage is tallied")
      ->check(CLI::Range(0.0, kTwoPi));
  experiment->add_option("--max-retries", exp.max_retries, "Re-draws per replication on empty cells")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  DiagnoseArgs dia;
  auto* diagnose = app.add_subcommand("diagnose", "Finite-n values of the kernel and frontier conditions");
  diagnose->add_option("--frontier", dia.frontier, "Frontier tag")->check(frontier_validator)->required();
  diagnose->add_option("--k", dia.k, "Number of cells")->check(CLI::PositiveNumber)->required();
  diagnose->add_option("--m", dia.m, "Kernel order")->check(CLI::NonNegativeNumber)->required();
  diagnose->add_option("--n", dia.n, "Intensity index n")->check(CLI::PositiveNumber)->required();
  diagnose->add_option("--c", dia.c, "Intensity constant (default 1/int f)")->check(CLI::PositiveNumber);
  diagnose->add_option("--x", dia.x, "Query angles (default 0, pi/2, pi)")->check(CLI::Range(0.0, kTwoPi));
  diagnose->add_option("--grid-per-cell", dia.grid_per_cell, "Grid points per cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*simulate) return cmd_simulate(g, sim);
    if (*estimate) return cmd_estimate(g, est);
    if (*experiment) return cmd_experiment(g, exp);
    if (*diagnose) return cmd_diagnose(g, dia);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::parse_error ? kUsageError : kRuntimeFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
  return kUsageError;
}
