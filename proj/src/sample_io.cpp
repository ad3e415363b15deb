// SPDX-License-Identifier: Apache-2.0
#include "frontier/sample_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "frontier/errors.hpp"

namespace frontier {

std::string format_number(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

void write_sample_csv(std::ostream& out, const PointSample& sample) {
  const int d = sample.dimension();
  if (d == 2) {
    out << "x,y,u,v\n";
  } else {
    for (int j = 1; j < d; ++j) out << 'x' << j << ',';
    out << 'y';
    static constexpr const char* kCartesian[] = {"u", "v", "w"};
    for (int j = 0; j < d; ++j) out << ',' << (j < 3 ? kCartesian[j] : "p" + std::to_string(j + 1));
    out << '\n';
  }
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (double a : sample.direction(i)) out << format_number(a) << ',';
    out << format_number(sample.radius(i));
    for (double p : sample.cartesian(i)) out << ',' << format_number(p);
    out << '\n';
  }
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_field(std::string_view text, std::size_t line_number) {
  while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw Error(Errc::parse_error, "line " + std::to_string(line_number) + ": bad number '" +
                                       std::string(text) + "'");
  return value;
}

}  // namespace

PointSample read_sample_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::parse_error, "empty sample file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line);
  int d = 0;
  if (line == "x,y,u,v") {
    d = 2;
  } else {
    // x1,...,x{d-1},y,<d cartesian columns>
    int angles = 0;
    while (angles < static_cast<int>(header.size()) &&
           header[angles] == "x" + std::to_string(angles + 1))
      ++angles;
    d = angles + 1;
    if (angles < 2 || header.size() != static_cast<std::size_t>(2 * d) || header[angles] != "y")
      throw Error(Errc::parse_error, "unrecognised sample header '" + line + "'");
  }
  PointSample sample(d, {});
  std::vector<double> angles(static_cast<std::size_t>(d - 1));
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    const auto fields = split(line);
    if (fields.size() != static_cast<std::size_t>(2 * d))
      throw Error(Errc::parse_error, "line " + std::to_string(line_number) + ": expected " +
                                         std::to_string(2 * d) + " fields");
    for (int j = 0; j < d - 1; ++j) angles[j] = parse_field(fields[j], line_number);
    const double radius = parse_field(fields[d - 1], line_number);
    if (!is_canonical(angles))
      throw Error(Errc::out_of_domain, "line " + std::to_string(line_number) + ": angle outside E");
    if (!(radius >= 0.0))
      throw Error(Errc::parse_error, "line " + std::to_string(line_number) + ": negative radius");
    sample.add(angles, radius);
  }
  return sample;
}

nlohmann::json metadata_to_json(const PointSample& sample) {
  const auto& m = sample.metadata();
  nlohmann::json j;
  j["n"] = m.n;
  j["c"] = m.c;
  j["kind"] = std::string(1, to_char(m.kind));
  j["seed"] = m.seed;
  j["model"] = m.model_tag;
  j["frontier"] = m.frontier_tag;
  j["dimension"] = sample.dimension();
  j["count"] = sample.size();
  return j;
}

SampleMetadata metadata_from_json(const nlohmann::json& j) {
  try {
    SampleMetadata m;
    m.n = j.at("n").get<int>();
    m.c = j.at("c").get<double>();
    m.kind = parse_process_kind(j.at("kind").get<std::string>());
    m.seed = j.value("seed", std::uint64_t{0});
    m.model_tag = j.value("model", std::string{});
    m.frontier_tag = j.value("frontier", std::string{});
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("sample sidecar: ") + e.what());
  }
}

void save_sample(const PointSample& sample, const std::filesystem::path& prefix) {
  auto csv_path = prefix;
  csv_path += ".csv";
  auto json_path = prefix;
  json_path += ".json";
  std::ofstream csv(csv_path);
  if (!csv) throw Error(Errc::invalid_argument, "cannot write " + csv_path.string());
  write_sample_csv(csv, sample);
  std::ofstream sidecar(json_path);
  if (!sidecar) throw Error(Errc::invalid_argument, "cannot write " + json_path.string());
  sidecar << metadata_to_json(sample).dump(2) << '\n';
}

PointSample load_sample(const std::filesystem::path& csv_path, bool* has_sidecar) {
  std::ifstream in(csv_path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + csv_path.string());
  PointSample sample = read_sample_csv(in);
  auto sidecar_path = csv_path;
  sidecar_path.replace_extension(".json");
  std::ifstream sidecar(sidecar_path);
  if (has_sidecar) *has_sidecar = static_cast<bool>(sidecar);
  if (sidecar) {
    nlohmann::json j;
    try {
      sidecar >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::parse_error, sidecar_path.string() + ": " + e.what());
    }
    if (j.contains("dimension") && j["dimension"].get<int>() != sample.dimension())
      throw Error(Errc::parse_error, "sidecar dimension does not match the CSV header");
    sample.metadata() = metadata_from_json(j);
  }
  return sample;
}

}  // namespace frontier
