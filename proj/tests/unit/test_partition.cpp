// SPDX-License-Identifier: Apache-2.0
#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "frontier/errors.hpp"
#include "frontier/partition.hpp"
#include "frontier/polar.hpp"
#include "support/oracles.hpp"

using namespace frontier;
using Catch::Matchers::WithinAbs;

TEST_CASE("equidistant partition cuts and measures") {
  const auto p = build_partition(4, 2);
  const auto& cuts = p.cuts(0);
  REQUIRE(cuts.size() == 5);
  CHECK(cuts[0] == 0.0);
  CHECK(cuts[1] == kPi / 2);
  CHECK(cuts[2] == kPi);
  CHECK(cuts[3] == 3 * kPi / 2);
  CHECK(cuts[4] == kTwoPi);
  for (int k : {1, 3, 7, 20, 256}) {
    const auto q = build_partition(k, 2);
    CHECK(q.size() == static_cast<std::size_t>(k));
    const double total = std::accumulate(q.measures().begin(), q.measures().end(), 0.0);
    CHECK_THAT(total, WithinAbs(1.0, 1e-14));
    CHECK(q.min_measure() == 1.0 / k);
  }
  CHECK_THROWS_AS(build_partition(0, 2), Error);
  CHECK_THROWS_AS(build_partition(4, 4), Error);
}

TEST_CASE("cell lookup uses half-open cells") {
  const auto p = build_partition(4, 2);
  CHECK(p.cell_of(Direction{0.0}) == 0);
  CHECK(p.cell_of(Direction{kPi / 2}) == 1);
  CHECK(p.cell_of(Direction{std::nextafter(kPi / 2, 0.0)}) == 0);
  CHECK(p.cell_of(Direction{std::nextafter(kTwoPi, 0.0)}) == 3);
  CHECK_THROWS_AS(p.cell_of(Direction{kTwoPi}), Error);
  CHECK_THROWS_AS(p.cell_of(Direction{-0.1}), Error);
}

TEST_CASE("spherical partition cells are equiprobable under h_3") {
  const auto p = build_partition(8, 3);
  REQUIRE(p.size() == 8);
  CHECK(p.cells_along(0) == 2);
  CHECK(p.cells_along(1) == 4);
  for (std::size_t r = 0; r < p.size(); ++r) {
    const auto [a0, b0] = p.interval(r, 0);
    const auto [a1, b1] = p.interval(r, 1);
    const double mass = oracle::integrate([](double t) { return std::sin(t); }, a0, b0) * (b1 - a1) / (4.0 * oracle::pi);
    CHECK_THAT(mass, WithinAbs(1.0 / 8.0, 1e-10));
    CHECK_THAT(p.measure(r), WithinAbs(1.0 / 8.0, 1e-15));
  }
  const double x[] = {0.1, 0.1};
  CHECK(p.cell_of(x) == 0);
  const double y[] = {3.0, 6.0};
  CHECK(p.cell_of(y) == 7);
}
