// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace frontier {

/// Standard normal CDF.
double normal_cdf(double z);

/// Standard normal quantile: Acklam's rational approximation (relative error ~1e-9)
/// followed by one Halley step against erfc. Requires p in (0, 1).
double normal_quantile(double p);

/// z_gamma, the (gamma + 1)/2 quantile of N(0, 1). Requires gamma in (0, 1).
double z_gamma(double gamma);

}  // namespace frontier
