// SPDX-License-Identifier: Apache-2.0
#include "frontier/estimate_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include "frontier/errors.hpp"
#include "frontier/sample_io.hpp"

namespace frontier {
namespace {

nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::json numbers(const std::vector<double>& values) {
  auto out = nlohmann::json::array();
  for (double v : values) out.push_back(number(v));
  return out;
}

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path.string());
  return out;
}

}  // namespace

nlohmann::json estimate_to_json(const EstimateResult& r) {
  nlohmann::json j;
  j["settings"] = {{"n", r.n},         {"k", r.k},
                   {"m", r.order},     {"l", 2 * r.order},
                   {"kind", std::string(1, r.kind)},
                   {"dimension", r.dimension},
                   {"gamma", r.gamma}, {"model", r.model_tag}};
  j["c_hat"] = number(r.c_hat);
  j["z_gamma"] = number(r.z_gamma);
  j["sample_size"] = r.sample_size;

  auto grid = nlohmann::json::array();
  for (const auto& x : r.grid) {
    if (x.size() == 1) {
      grid.push_back(x[0]);
    } else {
      grid.push_back(std::vector<double>(x.angles().begin(), x.angles().end()));
    }
  }
  j["grid"] = std::move(grid);
  j["f_hat"] = numbers(r.f_hat);
  j["g_hat"] = numbers(r.g_hat);
  j["ci_lo"] = numbers(r.ci_lower);
  j["ci_hi"] = numbers(r.ci_upper);
  j["ci_half_width"] = numbers(r.ci_half_width);
  auto clamped = nlohmann::json::array();
  for (std::size_t i = 0; i < r.clamped.size(); ++i)
    if (r.clamped[i]) clamped.push_back(i);
  j["clamped_indices"] = std::move(clamped);

  const auto& t = r.normalization;
  j["normalization"] = {{"v_n", number(t.v_n)},
                        {"clt_scale", numbers(t.clt_scale)},
                        {"polar_scale", numbers(t.polar_scale)},
                        {"rate_scale", numbers(t.rate_scale)}};
  const auto& s = r.snapshot;
  j["diagnostics"] = {{"min_count", s.min_count},   {"max_count", s.max_count},
                      {"mean_count", s.mean_count}, {"nu_n", s.nu_n},
                      {"max_abs_weight", s.max_abs_weight}, {"clamped", s.clamped}};
  return j;
}

void write_estimate_csv(std::ostream& out, const EstimateResult& r) {
  if (r.dimension == 2) {
    out << "x";
  } else {
    for (int j = 1; j < r.dimension; ++j) out << (j > 1 ? "," : "") << 'x' << j;
  }
  out << ",f_hat,ci_lo,ci_hi\n";
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    for (std::size_t a = 0; a < r.grid[i].size(); ++a) out << (a ? "," : "") << format_number(r.grid[i][a]);
    out << ',' << format_number(r.f_hat[i]) << ',' << format_number(r.ci_lower[i]) << ','
        << format_number(r.ci_upper[i]) << '\n';
  }
}

void save_estimate(const EstimateResult& result, const std::filesystem::path& prefix) {
  auto csv_path = prefix;
  csv_path += ".csv";
  auto json_path = prefix;
  json_path += ".json";
  {
    auto out = open_output(csv_path);
    write_estimate_csv(out, result);
  }
  auto out = open_output(json_path);
  out << estimate_to_json(result).dump(2) << '\n';
}

double mean_ci_width(const EstimateResult& r) {
  double total = 0.0;
  std::size_t count = 0;
  for (double h : r.ci_half_width)
    if (std::isfinite(h)) {
      total += 2.0 * h;
      ++count;
    }
  return count ? total / static_cast<double>(count) : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace frontier
