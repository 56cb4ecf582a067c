#pragma once

#include <cstdint>

#include "levyvar/levy/model.hpp"
#include "levyvar/paths/sample_path.hpp"

namespace levyvar::paths {

/// Barndorff-Nielsen--Shephard stochastic volatility:
///   d sigma2_t = -alpha sigma2_t dt + dL_{alpha t},   L a subordinator,
///   d G_t      = (mu + b sigma2_t) dt + sigma_t dW_t.
/// The path carries three coordinates (t, sigma2, G).
struct BnsModel {
    levy::LevyModel subordinator;  // scalar, nondecreasing, enumerable jumps
    double alpha_rate = 1.0;       // >= 0; 0 degenerates to pure decay off
    double mu = 0.0;
    double b = 0.0;
    double sigma0_sq = 1.0;        // >= 0

    BnsModel(levy::LevyModel subordinator_, double alpha_rate_, double mu_, double b_,
             double sigma0_sq_);
};

/// Volatility integrated exactly between jumps (linear ODE plus jump adds);
/// Euler-Maruyama for G. Jump record lists the sigma2 jumps.
SamplePath simulate_bns(const BnsModel& model, const GridSpec& grid, std::uint64_t seed);

/// Scheme core reused by the refinement wrapper: time-mapped subordinator events
/// and Brownian cell increments are supplied by the caller.
SamplePath bns_from_inputs(const BnsModel& model, const GridSpec& grid,
                           const std::vector<PathJump>& events, std::span<const double> dw);

}  // namespace levyvar::paths
