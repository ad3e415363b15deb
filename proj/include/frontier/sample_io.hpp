// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "json.hpp"

#include "frontier/sample.hpp"

namespace frontier {

/// CSV with a mandatory header. d = 2: `x,y,u,v` (angle, radius, Cartesian u, v).
/// d = 3: `x1,x2,y,u,v,w`.
void write_sample_csv(std::ostream& out, const PointSample& sample);

/// Reads the CSV written by write_sample_csv; Cartesian columns are ignored. Metadata is
/// left default.
PointSample read_sample_csv(std::istream& in);

nlohmann::json metadata_to_json(const PointSample& sample);
SampleMetadata metadata_from_json(const nlohmann::json& j);

/// Writes `<prefix>.csv` and the `<prefix>.json` sidecar.
void save_sample(const PointSample& sample, const std::filesystem::path& prefix);

/// Loads a sample CSV and, when present, the sidecar with the same stem and a .json
/// extension. Returns whether a sidecar was found through `has_sidecar`.
PointSample load_sample(const std::filesystem::path& csv_path, bool* has_sidecar = nullptr);

/// Formats a double with 17 significant digits ('.' decimal point).
std::string format_number(double value);

}  // namespace frontier
