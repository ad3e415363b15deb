// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frontier/frontier_function.hpp"
#include "frontier/polar.hpp"
#include "frontier/process_model.hpp"
#include "frontier/random.hpp"

namespace frontier {

/// (P) Poisson point process or (E) n-sample empirical process.
enum class ProcessKind { poisson, empirical };

char to_char(ProcessKind kind) noexcept;
ProcessKind parse_process_kind(std::string_view text);

struct SampleMetadata {
  int n = 0;
  double c = 0.0;
  ProcessKind kind = ProcessKind::poisson;
  std::uint64_t seed = 0;
  std::string model_tag;
  std::string frontier_tag;
};

/// Realisation {(X_i, Y_i)} in angle-radius coordinates. Angles are stored flat with
/// stride d - 1.
class PointSample {
 public:
  PointSample() = default;
  PointSample(int dimension, SampleMetadata metadata);

  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return radii_.size(); }
  bool empty() const noexcept { return radii_.empty(); }

  std::span<const double> direction(std::size_t i) const {
    const std::size_t stride = static_cast<std::size_t>(dimension_ - 1);
    return {angles_.data() + i * stride, stride};
  }
  double radius(std::size_t i) const { return radii_[i]; }
  std::vector<double> cartesian(std::size_t i) const {
    return polar_to_cartesian(direction(i), radius(i));
  }

  void reserve(std::size_t count);
  void add(std::span<const double> angles, double radius);

  const std::vector<double>& radii() const noexcept { return radii_; }
  const std::vector<double>& flat_angles() const noexcept { return angles_; }

  const SampleMetadata& metadata() const noexcept { return metadata_; }
  SampleMetadata& metadata() noexcept { return metadata_; }

  /// Copy with every radius multiplied by `factor`.
  PointSample scaled(double factor) const;

 private:
  int dimension_ = 2;
  std::vector<double> angles_;
  std::vector<double> radii_;
  SampleMetadata metadata_;
};

/// (gamma_d / d) * int_E f^d h_d, the Lebesgue volume of S^pol, by adaptive quadrature.
double star_volume(const FrontierFunction& f, int d);

/// int_E Phi_x(f(x)) h_d(x) dx: expected count per unit n c under `model`.
double homogenized_mass(const ProcessModel& model, const FrontierFunction& f);

/// Draws a direction from h_d under d in {2, 3}.
Direction sample_base_direction(int d, Rng& rng);

/// Draws from the polar-angle density h_d f^d / int h_d f^d by rejection against the
/// envelope h_d M^d. `proposals`, when given, is incremented by the number of draws used.
Direction sample_angle(const FrontierFunction& f, int d, Rng& rng, std::size_t* proposals = nullptr);

/// Uniform points on S^pol with mean measure n c du dv (kind P) or exactly n i.i.d.
/// points (kind E), sampled in the angle-radius frame with radius f(x) U^(1/d).
/// Requires d in {2, 3}.
PointSample sample_star_support(const FrontierFunction& f, int n, double c, int d,
                                ProcessKind kind, std::uint64_t seed);

/// Points of the process with mean measure n c phi 1_S nu(dx) dy for an arbitrary model,
/// sampled through the homogenised frontier: X ~ h g, V ~ U(0, g(X)), Y = Phi_X^{-1}(V).
PointSample sample_process(const ProcessModel& model, const FrontierFunction& f, int n,
                           ProcessKind kind, std::uint64_t seed);

/// Maps every (X_i, Y_i) to (X_i, Phi_{X_i}(Y_i)).
PointSample homogenize(const PointSample& sample, const ProcessModel& model);

}  // namespace frontier
