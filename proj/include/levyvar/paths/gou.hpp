#pragma once

#include <cstdint>

#include "levyvar/levy/model.hpp"
#include "levyvar/paths/sample_path.hpp"

namespace levyvar::paths {

/// Generalized Ornstein-Uhlenbeck dX = (X_{t-} - m) dU + dL. The two driving
/// coordinates live in one joint 2-dim model so they may share jump structure.
struct GouModel {
    levy::LevyModel joint;  // coordinates (U, L)
    double mean_level = 0.0;
    double x0 = 0.0;

    GouModel(levy::LevyModel joint_, double mean_level_, double x0_);

    static GouModel independent(const levy::LevyModel& u, const levy::LevyModel& l,
                                double mean_level, double x0);
};

enum class GouScheme {
    euler,      // X += (X - m) dU + dL with exact joint driver increments
    exp_drift,  // exact exponential stepping; requires a deterministic U = rate * t
};

SamplePath simulate_gou(const GouModel& model, const GridSpec& grid, std::uint64_t seed,
                        GouScheme scheme = GouScheme::euler, double explosion_cap = 1e12);

/// Closed form for the Gaussian OU case U_t = -gamma t, L_t = sigma W_t:
///   X_t = m (1 - e^{-gamma t}) + x0 e^{-gamma t} + sigma e^{-gamma t} W_{tau(t)},
/// tau(t) = (e^{2 gamma t} - 1) / (2 gamma), tau = t when gamma = 0. Exact in law
/// on the grid (the Brownian path is sampled at the tau-times).
SamplePath gaussian_ou_exact(double gamma, double sigma, double mean_level, double x0,
                             const GridSpec& grid, std::uint64_t seed);

}  // namespace levyvar::paths
