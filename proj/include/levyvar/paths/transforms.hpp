#pragma once

#include <functional>

#include "levyvar/paths/sample_path.hpp"

namespace levyvar::paths {

/// Doleans-Dade exponential of a scalar semimartingale path:
///   E(Z)_t = exp(Z_t - Z_0 - qv_rate * t / 2) * prod_{s<=t} (1 + dZ_s) e^{-dZ_s}.
/// `qv_rate` is the continuous quadratic variation per unit time, taken from the
/// driver's Gaussian coefficient rather than the realized quadratic sum. The jump
/// record must list every jump of the path. A jump of exactly -1 absorbs the
/// result at zero; jumps below -1 flip signs per the formula and leave a warning.
SamplePath stochastic_exponential(const SamplePath& z, double qv_rate);

/// Y_t = X_{clock(t)} on the output grid, with cadlag (piecewise-constant,
/// right-continuous) lookup between grid points of X. Requires clock(0) = 0,
/// clock nondecreasing, and clock values within the horizon of X.
SamplePath time_change(const SamplePath& x, const std::vector<double>& out_times,
                       const std::function<double(double)>& clock);

}  // namespace levyvar::paths
