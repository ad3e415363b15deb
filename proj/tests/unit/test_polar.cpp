// SPDX-License-Identifier: Apache-2.0
#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "frontier/errors.hpp"
#include "frontier/polar.hpp"
#include "support/oracles.hpp"

using namespace frontier;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("gamma_d matches the sphere surface areas") {
  CHECK(gamma_d(2) == kTwoPi);
  CHECK_THAT(gamma_d(3), WithinRel(4.0 * kPi, 1e-15));
  const double d3 = oracle::integrate([](double x) { return std::sin(x); }, 0.0, kPi) * kTwoPi;
  CHECK_THAT(gamma_d(3), WithinRel(d3, 1e-12));
  // 2 pi^(d/2) / Gamma(d/2)
  CHECK_THAT(gamma_d(4), WithinRel(2.0 * kPi * kPi, 1e-10));
  CHECK_THAT(gamma_d(5), WithinRel(8.0 * kPi * kPi / 3.0, 1e-10));
  CHECK_THROWS_AS(gamma_d(1), Error);
}

TEST_CASE("base density integrates to one") {
  CHECK_THAT(base_density(Direction{1.0}.angles()) * kTwoPi, WithinRel(1.0, 1e-15));
  const double total = oracle::integrate(
      [](double x1) { return base_density(Direction{x1, 0.3}.angles()); }, 0.0, kPi) * kTwoPi;
  CHECK_THAT(total, WithinRel(1.0, 1e-12));
}

TEST_CASE("polar to cartesian examples") {
  auto p = polar_to_cartesian(Direction{0.0}, 2.0);
  CHECK_THAT(p[0], WithinAbs(2.0, 1e-15));
  CHECK_THAT(p[1], WithinAbs(0.0, 1e-15));
  p = polar_to_cartesian(Direction{kPi / 2}, 1.0);
  CHECK_THAT(p[0], WithinAbs(0.0, 1e-15));
  CHECK_THAT(p[1], WithinAbs(1.0, 1e-15));
}

TEST_CASE("cartesian to polar examples") {
  const double down[] = {0.0, -1.0};
  auto q = cartesian_to_polar(down);
  CHECK_THAT(q.direction[0], WithinAbs(3.0 * kPi / 2.0, 1e-15));
  CHECK_THAT(q.radius, WithinAbs(1.0, 1e-15));
  const double diag[] = {1.0, 1.0};
  q = cartesian_to_polar(diag);
  CHECK_THAT(q.direction[0], WithinAbs(kPi / 4.0, 1e-15));
  CHECK_THAT(q.radius, WithinAbs(std::sqrt(2.0), 1e-15));
  const double origin[] = {0.0, 0.0, 0.0};
  CHECK_THROWS_MATCHES(cartesian_to_polar(origin), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::undefined_direction; }));
}

TEST_CASE("boundary angles are canonical") {
  const double neg_x[] = {-1.0, 0.0, 0.0};  // polar angle pi
  const auto q = cartesian_to_polar(neg_x);
  CHECK(q.direction.is_canonical());
  CHECK(q.direction[0] < kPi);
  const double just_below[] = {1.0, -1e-300};
  CHECK(cartesian_to_polar(just_below).direction.is_canonical());
  CHECK_FALSE(is_canonical(Direction{kTwoPi}.angles()));
  CHECK(is_canonical(Direction{0.0}.angles()));
}

TEST_CASE("round trip and norm preservation") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> polar(0.0, kPi), azimuth(0.0, kTwoPi), radius(0.01, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const Direction x{polar(gen), azimuth(gen)};
    const double y = radius(gen);
    const auto p = polar_to_cartesian(x, y);
    CHECK_THAT(std::hypot(p[0], p[1], p[2]), WithinRel(y, 1e-12));
    const auto back = cartesian_to_polar(p);
    CHECK_THAT(back.radius, WithinRel(y, 1e-12));
    CHECK_THAT(back.direction[0], WithinAbs(x[0], 1e-12));
    CHECK_THAT(back.direction[1], WithinAbs(x[1], 1e-12));

    const Direction x2{azimuth(gen)};
    const auto p2 = polar_to_cartesian(x2, y);
    const auto back2 = cartesian_to_polar(p2);
    CHECK_THAT(back2.direction[0], WithinAbs(x2[0], 1e-12));
  }
}

TEST_CASE("Jacobian of the polar map equals gamma_d y^(d-1) h_d") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> polar(0.2, kPi - 0.2), azimuth(0.0, kTwoPi), radius(0.2, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double v[3] = {polar(gen), azimuth(gen), radius(gen)};
    double jac[3][3];
    const double h = 1e-6;
    for (int c = 0; c < 3; ++c) {
      double lo[3] = {v[0], v[1], v[2]}, hi[3] = {v[0], v[1], v[2]};
      lo[c] -= h;
      hi[c] += h;
      const auto pl = polar_to_cartesian(std::span<const double>(lo, 2), lo[2]);
      const auto ph = polar_to_cartesian(std::span<const double>(hi, 2), hi[2]);
      for (int r = 0; r < 3; ++r) jac[r][c] = (ph[r] - pl[r]) / (2.0 * h);
    }
    const double det = jac[0][0] * (jac[1][1] * jac[2][2] - jac[1][2] * jac[2][1]) -
                       jac[0][1] * (jac[1][0] * jac[2][2] - jac[1][2] * jac[2][0]) +
                       jac[0][2] * (jac[1][0] * jac[2][1] - jac[1][1] * jac[2][0]);
    const double expected = gamma_d(3) * v[2] * v[2] * base_density(std::span<const double>(v, 2));
    CHECK_THAT(std::abs(det), WithinRel(expected, 1e-6));
  }
}
