// SPDX-License-Identifier: Apache-2.0
#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "frontier/errors.hpp"
#include "frontier/experiment.hpp"
#include "support/oracles.hpp"

using namespace frontier;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> uniform_grid(std::size_t size) {
  std::vector<double> g(size);
  for (std::size_t i = 0; i < size; ++i) g[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(size);
  return g;
}

std::vector<double> evaluate(const FrontierFunction& f, const std::vector<double>& grid, double factor) {
  std::vector<double> v;
  for (double x : grid) v.push_back(factor * f(x));
  return v;
}

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.reps = 6;
  c.n = 400;
  c.grid_size = 256;
  c.seed = 11;
  return c;
}

}  // namespace

TEST_CASE("relative L1 error") {
  const auto f = FrontierFunction::paper();
  const auto g = uniform_grid(1024);
  CHECK(l1_relative_error(evaluate(f, g, 1.0), f, g) == 0.0);
  CHECK_THAT(l1_relative_error(evaluate(f, g, 1.1), f, g), WithinRel(0.1, 1e-12));

  // A fixed perturbation, integrated on two grid sizes.
  auto bumped = [&](const std::vector<double>& grid) {
    std::vector<double> v;
    for (double x : grid) v.push_back(f(x) + 0.2 * std::sin(x));
    return v;
  };
  const auto g4 = uniform_grid(4096);
  const double coarse = l1_relative_error(bumped(g), f, g);
  const double fine = l1_relative_error(bumped(g4), f, g4);
  CHECK(std::abs(coarse - fine) < 1e-4);
  const double exact = 0.8 / oracle::integrate_panels([&](double x) { return f(x); }, 0.0, 2.0 * oracle::pi, 6);
  CHECK_THAT(fine, WithinRel(exact, 1e-6));

  CHECK_THROWS_AS(l1_relative_error(std::vector<double>{1.0}, f, std::vector<double>{0.0}), Error);
}

TEST_CASE("corollary schedule") {
  const auto a = corollary5_schedule(100, 1.0);
  CHECK(a.k == 17);
  CHECK(a.order == 3);
  CHECK(a.ell == 6);
  const auto b = corollary5_schedule(400, 1.0);
  CHECK(b.k == 37);
  CHECK(b.order == 5);
  const auto c = corollary5_schedule(1600, 1.0);
  CHECK(c.k == 81);
  CHECK(c.order == 8);
  CHECK(corollary5_schedule(100, 2.0).k == std::lround(std::pow(100.0, 14.0 / 27.0) * std::pow(std::log(100.0), 2.0 / 7.0) * 4.0));
  CHECK_THROWS_AS(corollary5_schedule(1, 1.0), Error);
  CHECK_THROWS_AS(corollary5_schedule(100, 0.0), Error);

  ExperimentConfig cfg;
  cfg.schedule = Schedule::corollary5;
  const auto r = cfg.resolved();
  CHECK(r.k == 17);
  CHECK(r.order == 3);
  CHECK(parse_schedule("corollary5") == Schedule::corollary5);
  CHECK_THROWS_AS(parse_schedule("other"), Error);
}

TEST_CASE("config resolution") {
  ExperimentConfig c;
  const auto r = c.resolved();
  const auto f = FrontierFunction::paper();
  CHECK_THAT(*r.c, WithinRel(1.0 / oracle::integrate_panels([&](double x) { return f(x); }, 0.0, 2.0 * oracle::pi, 6), 1e-10));
  c.reps = 0;
  CHECK_THROWS_AS(c.resolved(), Error);
  c = ExperimentConfig{};
  c.gamma = 1.0;
  CHECK_THROWS_AS(c.resolved(), Error);
  c = ExperimentConfig{};
  c.coverage_points = {7.0};
  CHECK_THROWS_AS(c.resolved(), Error);
}

TEST_CASE("one replication: min = mean = max") {
  auto c = small_config();
  c.reps = 1;
  const auto r = run_experiment(c);
  REQUIRE(r.replications.size() == 1);
  CHECK(r.xi_min == r.xi_mean);
  CHECK(r.xi_mean == r.xi_max);
  CHECK(r.best == 0);
  CHECK(r.worst == 0);
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  auto c = small_config();
  const auto a = run_experiment(c);
  const auto b = run_experiment(c);
  c.jobs = 3;
  const auto d = run_experiment(c);
  REQUIRE(a.replications.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(a.replications[i].xi == b.replications[i].xi);
    CHECK(a.replications[i].xi == d.replications[i].xi);
    CHECK(a.replications[i].seed == d.replications[i].seed);
    CHECK(a.replications[i].rep == static_cast<int>(i));
  }
  CHECK(experiment_to_json(a).dump() == experiment_to_json(b).dump());
  CHECK(a.xi_min <= a.xi_mean);
  CHECK(a.xi_mean <= a.xi_max);
  CHECK(a.replications[a.best].xi == a.xi_min);
  CHECK(a.replications[a.worst].xi == a.xi_max);

  std::stringstream csv;
  write_experiment_csv(csv, a);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "rep,xi_n,retries");
}

TEST_CASE("retries are recorded and replayable") {
  // Small n with many cells makes empty cells frequent.
  ExperimentConfig c;
  c.reps = 20;
  c.n = 100;
  c.grid_size = 64;
  c.seed = 3;
  const auto r = run_experiment(c);
  std::size_t total = 0;
  for (const auto& rec : r.replications) {
    CHECK(rec.retried_seeds.size() == static_cast<std::size_t>(rec.retries));
    CHECK(rec.retries <= c.max_retries);
    if (rec.retries == 0) CHECK(rec.seed == stream_seed(c.seed, static_cast<std::uint64_t>(rec.rep)));
    else CHECK(rec.seed == (stream_seed(c.seed, static_cast<std::uint64_t>(rec.rep)) ^ mix64(static_cast<std::uint64_t>(rec.retries))));
    total += static_cast<std::size_t>(rec.retries);
  }
  CHECK(total == r.total_retries);
  CHECK(total > 0);

  const auto resolved = c.resolved();
  const auto& worst = r.replications[r.worst];
  const auto again = replay(resolved, worst);
  const auto grid = uniform_grid(64);
  CHECK(l1_relative_error(again.estimate.f_hat, FrontierFunction::paper(), grid) == worst.xi);

  c.max_retries = 0;
  c.reps = 100;
  CHECK_THROWS_AS(run_experiment(c), EmptyCellError);
}

TEST_CASE("the error is invariant to scaling the frontier") {
  auto c = small_config();
  c.reps = 3;
  c.frontier = "constant:1";
  c.c = 1.0 / kTwoPi;
  const auto a = run_experiment(c);
  c.frontier = "constant:3";
  c.c = 1.0 / (9.0 * kTwoPi);
  const auto b = run_experiment(c);
  for (std::size_t i = 0; i < 3; ++i) CHECK_THAT(b.replications[i].xi, WithinRel(a.replications[i].xi, 1e-9));
}

TEST_CASE("coverage tallies") {
  auto c = small_config();
  c.reps = 10;
  const auto cov = coverage_study(c, {0.0, 1.0});
  REQUIRE(cov.size() == 2);
  for (const auto& e : cov) {
    CHECK(e.total == 10);
    CHECK(e.hits <= 10);
    CHECK_THAT(e.fraction, WithinAbs(static_cast<double>(e.hits) / 10.0, 1e-15));
    CHECK_THAT(e.standard_error, WithinAbs(std::sqrt(e.fraction * (1.0 - e.fraction) / 10.0), 1e-15));
  }
}
