// SPDX-License-Identifier: Apache-2.0
#include "frontier/sample.hpp"

#include <cmath>

#include "frontier/errors.hpp"
#include "frontier/quadrature.hpp"

namespace frontier {

char to_char(ProcessKind kind) noexcept { return kind == ProcessKind::poisson ? 'P' : 'E'; }

ProcessKind parse_process_kind(std::string_view text) {
  if (text == "P" || text == "p" || text == "poisson") return ProcessKind::poisson;
  if (text == "E" || text == "e" || text == "empirical") return ProcessKind::empirical;
  throw Error(Errc::parse_error, "process kind must be P or E, got '" + std::string(text) + "'");
}

PointSample::PointSample(int dimension, SampleMetadata metadata)
    : dimension_(dimension), metadata_(std::move(metadata)) {
  if (dimension < 2) throw Error(Errc::invalid_dimension, "sample dimension must be >= 2");
}

void PointSample::reserve(std::size_t count) {
  angles_.reserve(count * static_cast<std::size_t>(dimension_ - 1));
  radii_.reserve(count);
}

void PointSample::add(std::span<const double> angles, double radius) {
  if (angles.size() != static_cast<std::size_t>(dimension_ - 1))
    throw Error(Errc::invalid_argument, "direction has the wrong number of angles");
  angles_.insert(angles_.end(), angles.begin(), angles.end());
  radii_.push_back(radius);
}

PointSample PointSample::scaled(double factor) const {
  PointSample copy = *this;
  for (double& r : copy.radii_) r *= factor;
  return copy;
}

namespace {

void require_sampling_dimension(int d) {
  if (d != 2 && d != 3)
    throw Error(Errc::unsupported_dimension,
                "samplers support d in {2, 3}, got " + std::to_string(d));
}

double integrate_over_directions(int d, const std::function<double(std::span<const double>)>& f) {
  QuadratureOptions options;
  options.rel_tol = 1e-10;
  if (d == 2) {
    return integrate(
        [&](double x) {
          const double a[1] = {x};
          return f(a);
        },
        0.0, kTwoPi, options);
  }
  return integrate_2d(
      [&](double x1, double x2) {
        const double a[2] = {x1, x2};
        return f(a);
      },
      0.0, kPi, 0.0, kTwoPi, options);
}

}  // namespace

double homogenized_mass(const ProcessModel& model, const FrontierFunction& f) {
  require_sampling_dimension(model.dimension());
  return integrate_over_directions(model.dimension(), [&](std::span<const double> x) {
    return model.quantile_forward(x, f(x)) * base_density(x);
  });
}

double star_volume(const FrontierFunction& f, int d) {
  return homogenized_mass(ProcessModel::polar(d), f);
}

Direction sample_base_direction(int d, Rng& rng) {
  require_sampling_dimension(d);
  auto azimuth = [&] {
    double a = kTwoPi * rng.uniform();
    return a < kTwoPi ? a : 0.0;
  };
  if (d == 2) return Direction{azimuth()};
  // h_3 = sin(x1) / (4 pi): cos(x1) is uniform on (-1, 1].
  const double polar = std::acos(1.0 - 2.0 * rng.uniform());
  return Direction{polar, azimuth()};
}

Direction sample_angle(const FrontierFunction& f, int d, Rng& rng, std::size_t* proposals) {
  const double M = f.upper_bound();
  for (;;) {
    Direction x = sample_base_direction(d, rng);
    if (proposals) ++*proposals;
    const double ratio = std::pow(f(x) / M, d);
    if (rng.uniform() < ratio) return x;
  }
}

namespace {

std::size_t draw_count(ProcessKind kind, int n, double expected, Rng& rng) {
  if (kind == ProcessKind::empirical) return static_cast<std::size_t>(n);
  return static_cast<std::size_t>(poisson(rng, expected));
}

}  // namespace

PointSample sample_star_support(const FrontierFunction& f, int n, double c, int d,
                                ProcessKind kind, std::uint64_t seed) {
  require_sampling_dimension(d);
  if (n < 1) throw Error(Errc::invalid_argument, "n must be >= 1");
  if (!(c > 0.0)) throw Error(Errc::invalid_argument, "c must be positive");

  SampleMetadata meta{n, c, kind, seed, ProcessModel::polar(d).tag(), f.tag()};
  PointSample sample(d, meta);
  Rng rng(seed);
  const double expected = kind == ProcessKind::poisson ? n * c * star_volume(f, d) : 0.0;
  const std::size_t count = draw_count(kind, n, expected, rng);
  sample.reserve(count);
  const double inv_d = 1.0 / d;
  for (std::size_t i = 0; i < count; ++i) {
    const Direction x = sample_angle(f, d, rng);
    const double radius = f(x) * std::pow(rng.uniform(), inv_d);
    sample.add(x, radius);
  }
  return sample;
}

PointSample sample_process(const ProcessModel& model, const FrontierFunction& f, int n,
                           ProcessKind kind, std::uint64_t seed) {
  const int d = model.dimension();
  require_sampling_dimension(d);
  if (n < 1) throw Error(Errc::invalid_argument, "n must be >= 1");

  const FrontierFunction g = model.homogenized(f);
  SampleMetadata meta{n, model.c(), kind, seed, model.tag(), f.tag()};
  PointSample sample(d, meta);
  Rng rng(seed);
  const double expected =
      kind == ProcessKind::poisson ? n * model.c() * homogenized_mass(model, f) : 0.0;
  const std::size_t count = draw_count(kind, n, expected, rng);
  sample.reserve(count);
  const double g_max = g.upper_bound();
  for (std::size_t i = 0; i < count; ++i) {
    Direction x;
    double gx = 0.0;
    do {
      x = sample_base_direction(d, rng);
      gx = g(x);
    } while (!(rng.uniform() * g_max < gx));
    const double v = gx * rng.uniform();
    const double radius = std::min(model.quantile_inverse(x, v), f(x));
    sample.add(x, radius);
  }
  return sample;
}

PointSample homogenize(const PointSample& sample, const ProcessModel& model) {
  SampleMetadata meta = sample.metadata();
  meta.model_tag = "homogenized:" + model.tag();
  PointSample out(sample.dimension(), meta);
  out.reserve(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i)
    out.add(sample.direction(i), model.quantile_forward(sample.direction(i), sample.radius(i)));
  return out;
}

}  // namespace frontier
