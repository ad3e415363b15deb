// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace frontier {

/// Product-grid partition of E into k_n half-open cells I_{n,r} with exact nu-measures.
///
/// d = 2: equidistant arcs [2 pi (r-1)/k, 2 pi r/k). d = 3: k_polar bands cut at equal
/// mass of sin(x1)/2 (arccos inversion) times k_azimuth equidistant sectors. Cells are
/// numbered row-major with the azimuth index varying fastest.
class Partition {
 public:
  static Partition equidistant(int k);
  static Partition spherical(int k_polar, int k_azimuth);

  int dimension() const noexcept { return static_cast<int>(cuts_.size()) + 1; }
  std::size_t size() const noexcept { return measures_.size(); }

  /// Cut points of angle coordinate `coord`, from 0 to the coordinate's upper limit.
  const std::vector<double>& cuts(std::size_t coord) const { return cuts_[coord]; }
  std::size_t cells_along(std::size_t coord) const { return cuts_[coord].size() - 1; }

  /// Per-coordinate interval [a, b) of cell r.
  std::pair<double, double> interval(std::size_t r, std::size_t coord) const;

  /// Index of the cell holding `angles`; a point on a cut belongs to the cell on its right.
  /// Throws Error(out_of_domain) for angles outside E.
  std::size_t cell_of(std::span<const double> angles) const;

  double measure(std::size_t r) const { return measures_[r]; }
  const std::vector<double>& measures() const noexcept { return measures_; }
  /// nu_n = min_r nu_{n,r}.
  double min_measure() const noexcept;

 private:
  Partition(std::vector<std::vector<double>> cuts, std::vector<double> measures);
  std::vector<std::vector<double>> cuts_;
  std::vector<double> measures_;
};

/// Equiprobable partition with k cells for d in {2, 3}. For d = 3 the polar band count is
/// the largest divisor of k not above sqrt(k / 2).
Partition build_partition(int k, int d);

}  // namespace frontier
