// SPDX-License-Identifier: Apache-2.0
#include "frontier/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frontier/errors.hpp"
#include "frontier/polar.hpp"

namespace frontier {

Partition::Partition(std::vector<std::vector<double>> cuts, std::vector<double> measures)
    : cuts_(std::move(cuts)), measures_(std::move(measures)) {}

namespace {

std::vector<double> equidistant_cuts(int k) {
  std::vector<double> cuts(static_cast<std::size_t>(k) + 1);
  for (int r = 0; r < k; ++r) cuts[r] = kTwoPi * r / k;
  cuts[k] = kTwoPi;
  return cuts;
}

void require_positive(int k, const char* what) {
  if (k <= 0) throw Error(Errc::invalid_argument, std::string(what) + " must be >= 1");
}

}  // namespace

Partition Partition::equidistant(int k) {
  require_positive(k, "k_n");
  return Partition({equidistant_cuts(k)}, std::vector<double>(k, 1.0 / k));
}

Partition Partition::spherical(int k_polar, int k_azimuth) {
  require_positive(k_polar, "polar band count");
  require_positive(k_azimuth, "azimuth sector count");
  // nu([0, a) x [0, 2 pi)) = (1 - cos a) / 2, so equal mass cuts are arccos(1 - 2i/k).
  std::vector<double> polar(static_cast<std::size_t>(k_polar) + 1);
  for (int i = 0; i < k_polar; ++i) polar[i] = std::acos(1.0 - 2.0 * i / k_polar);
  polar[k_polar] = kPi;
  const int k = k_polar * k_azimuth;
  return Partition({std::move(polar), equidistant_cuts(k_azimuth)}, std::vector<double>(k, 1.0 / k));
}

std::pair<double, double> Partition::interval(std::size_t r, std::size_t coord) const {
  std::size_t stride = 1;
  for (std::size_t j = coord + 1; j < cuts_.size(); ++j) stride *= cells_along(j);
  const std::size_t index = (r / stride) % cells_along(coord);
  return {cuts_[coord][index], cuts_[coord][index + 1]};
}

std::size_t Partition::cell_of(std::span<const double> angles) const {
  if (angles.size() != cuts_.size())
    throw Error(Errc::out_of_domain, "direction dimension does not match the partition");
  std::size_t cell = 0;
  for (std::size_t j = 0; j < cuts_.size(); ++j) {
    const auto& cuts = cuts_[j];
    const double a = angles[j];
    if (!(a >= cuts.front() && a < cuts.back()))
      throw Error(Errc::out_of_domain, "angle outside E");
    const auto it = std::upper_bound(cuts.begin(), cuts.end(), a);
    const auto index = static_cast<std::size_t>(it - cuts.begin()) - 1;
    cell = cell * cells_along(j) + index;
  }
  return cell;
}

double Partition::min_measure() const noexcept {
  return measures_.empty() ? 0.0 : *std::min_element(measures_.begin(), measures_.end());
}

Partition build_partition(int k, int d) {
  require_positive(k, "k_n");
  if (d == 2) return Partition::equidistant(k);
  if (d == 3) {
    int polar = 1;
    for (int p = 1; static_cast<double>(p) * p <= k / 2.0; ++p)
      if (k % p == 0) polar = p;
    return Partition::spherical(polar, k / polar);
  }
  throw Error(Errc::unsupported_dimension, "partitions support d in {2, 3}");
}

}  // namespace frontier
