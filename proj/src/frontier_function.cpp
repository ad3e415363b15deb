// SPDX-License-Identifier: Apache-2.0
#include "frontier/frontier_function.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "frontier/errors.hpp"

namespace frontier {
namespace {

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw Error(Errc::parse_error, "not a number: '" + std::string(text) + "'");
  return value;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

FrontierFunction::FrontierFunction(Eval eval, double lower_bound, double upper_bound,
                                   std::string tag, std::string smoothness)
    : eval_(std::move(eval)),
      lower_(lower_bound),
      upper_(upper_bound),
      tag_(std::move(tag)),
      smoothness_(std::move(smoothness)) {
  if (!(lower_ > 0.0) || !(upper_ >= lower_) || !std::isfinite(upper_))
    throw Error(Errc::invalid_argument, "frontier bounds must satisfy 0 < m <= M < inf");
}

double FrontierFunction::operator()(std::span<const double> angles) const {
  const double value = eval_(angles);
  const double slack = 1e-12 * upper_;
  if (!std::isfinite(value) || value < lower_ - slack || value > upper_ + slack)
    throw Error(Errc::frontier_evaluation,
                "frontier '" + tag_ + "' evaluated to " + format_double(value) +
                    " outside its declared bounds");
  return value;
}

double FrontierFunction::operator()(double azimuth) const {
  const double angles[1] = {azimuth};
  return (*this)(std::span<const double>(angles, 1));
}

FrontierFunction FrontierFunction::paper() {
  return FrontierFunction(
      [](std::span<const double> x) { return 1.0 + std::exp(-std::cos(3.0 * x.back())); },
      1.0 + std::exp(-1.0), 1.0 + std::exp(1.0), "paper", "analytic, pi/3-periodic");
}

FrontierFunction FrontierFunction::constant(double value) {
  return FrontierFunction([value](std::span<const double>) { return value; }, value, value,
                          "constant:" + format_double(value), "constant");
}

FrontierFunction FrontierFunction::fourier(std::vector<double> coefficients) {
  if (coefficients.empty() || coefficients.size() % 2 == 0)
    throw Error(Errc::invalid_argument,
                "fourier frontier needs an odd coefficient count: a0, a1, b1, ...");
  double spread = 0.0;
  for (std::size_t i = 1; i < coefficients.size(); ++i) spread += std::abs(coefficients[i]);
  const double lower = coefficients[0] - spread;
  const double upper = coefficients[0] + spread;
  if (!(lower > 0.0))
    throw Error(Errc::invalid_argument, "fourier frontier is not bounded away from 0");
  std::string tag = "fourier:";
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    tag += (i ? "," : "") + format_double(coefficients[i]);
  return FrontierFunction(
      [c = std::move(coefficients)](std::span<const double> x) {
        const double t = x.back();
        double value = c[0];
        for (std::size_t j = 1; 2 * j <= c.size() - 1; ++j) {
          const double jt = static_cast<double>(j) * t;
          value += c[2 * j - 1] * std::cos(jt) + c[2 * j] * std::sin(jt);
        }
        return value;
      },
      lower, upper, std::move(tag), "trigonometric polynomial");
}

FrontierFunction FrontierFunction::parse(std::string_view spec) {
  if (spec == "paper") return paper();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw Error(Errc::parse_error, "unknown frontier '" + std::string(spec) + "'");
  const auto kind = spec.substr(0, colon);
  const auto args = spec.substr(colon + 1);
  if (kind == "constant") {
    const double v = parse_double(args);
    if (!(v > 0.0)) throw Error(Errc::invalid_argument, "constant frontier must be positive");
    return constant(v);
  }
  if (kind == "fourier") {
    std::vector<double> coefficients;
    std::size_t start = 0;
    while (start <= args.size()) {
      const auto comma = args.find(',', start);
      const auto end = comma == std::string_view::npos ? args.size() : comma;
      coefficients.push_back(parse_double(args.substr(start, end - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return fourier(std::move(coefficients));
  }
  throw Error(Errc::parse_error, "unknown frontier kind '" + std::string(kind) + "'");
}

FrontierFunction FrontierFunction::scaled(double factor) const {
  if (!(factor > 0.0)) throw Error(Errc::invalid_argument, "scale factor must be positive");
  return FrontierFunction([eval = eval_, factor](std::span<const double> x) { return factor * eval(x); },
                          factor * lower_, factor * upper_, tag_ + "*" + format_double(factor),
                          smoothness_);
}

}  // namespace frontier
