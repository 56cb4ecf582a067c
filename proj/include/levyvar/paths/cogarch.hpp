#pragma once

#include <cstdint>

#include "levyvar/levy/model.hpp"
#include "levyvar/paths/sample_path.hpp"

namespace levyvar::paths {

/// Continuous-time GARCH(1,1):
///   d sigma2_{t+} = (b + log(delta) sigma2_t) dt + (lam / delta) sigma2_t d[L,L]^{disc}_t
///   d G_t         = sigma_{t-} dL_t
/// driven by a scalar Levy model with enumerable jumps plus an optional Gaussian
/// part. The path carries (G, sigma2).
struct CogarchModel {
    levy::LevyModel driver;
    double delta = 0.9;      // in (0,1)
    double lam = 0.0;        // >= 0
    double b = 1.0;          // > 0
    double sigma0_sq = 1.0;  // >= 0

    CogarchModel(levy::LevyModel driver_, double delta_, double lam_, double b_,
                 double sigma0_sq_);
};

/// Jump-exact scheme: the volatility ODE is integrated in closed form between
/// driver jumps, jump contributions enter exactly with sigma read at the left
/// limit, and any Gaussian driver part moves G by Euler steps.
SamplePath simulate_cogarch(const CogarchModel& model, const GridSpec& grid, std::uint64_t seed);

/// Scheme core for refinement wrappers; events and Brownian increments supplied.
SamplePath cogarch_from_inputs(const CogarchModel& model, const GridSpec& grid,
                               const std::vector<PathJump>& events, std::span<const double> dw);

/// Independent volatility evaluation from a jump record, via the exponential
/// representation sigma2(t) = (b int_0^t e^{A_s} ds + sigma0^2) e^{-A_{t-}} with
/// A_t = -t log(delta) - sum_{s<=t} log(1 + (lam/delta) (dL_s)^2).
std::vector<double> cogarch_volatility_closed_form(const CogarchModel& model,
                                                   const std::vector<double>& times,
                                                   const std::vector<PathJump>& driver_jumps);

}  // namespace levyvar::paths
