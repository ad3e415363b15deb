// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>

#include "json.hpp"

#include "frontier/estimator.hpp"

namespace frontier {

/// Full result as JSON. Non-finite values (undefined intervals) are written as null.
nlohmann::json estimate_to_json(const EstimateResult& result);

/// `x,f_hat,ci_lo,ci_hi` for d = 2; `x1,x2,f_hat,ci_lo,ci_hi` for d = 3.
void write_estimate_csv(std::ostream& out, const EstimateResult& result);

/// Writes `<prefix>.csv` and `<prefix>.json`.
void save_estimate(const EstimateResult& result, const std::filesystem::path& prefix);

/// Mean of the finite CI half-widths times two; NaN when none is finite.
double mean_ci_width(const EstimateResult& result);

}  // namespace frontier
