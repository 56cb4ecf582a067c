#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "levyvar/levy/model.hpp"
#include "levyvar/paths/sample_path.hpp"
#include "levyvar/paths/sde.hpp"
#include "levyvar/paths/stable_like.hpp"

namespace levyvar::symbols {

// Draws the path value at the first dyadic grid time outside the closed ball
// B_radius(start), or at the horizon when the path stays inside. The stopped value
// is the state at that grid time (first point outside the ball).
struct StoppedSampler {
    std::function<Vec(double horizon, double radius, std::uint64_t seed, bool mirror)> draw;
    Vec start;
    bool mirrorable = false;  // mirror draws produce the sign-flipped increment stream
    std::string label;
};

StoppedSampler stopped_levy_sampler(const levy::LevyModel& model, Vec start, int steps = 16);
StoppedSampler stopped_sde_sampler(const paths::SdeModel& sde, int steps = 16);
StoppedSampler stopped_stable_like_sampler(const paths::StableLikeField& field, double start,
                                           int steps = 16);

struct McComplexEstimate {
    std::complex<double> value;
    double std_error = 0.0;  // rms of the real/imaginary standard errors
    std::size_t replicas = 0;
};

// Small-time stopped-symbol estimator -(1/t)(E e^{i(X^sigma_t - x)'xi} - 1). Mirrorable
// samplers average each replica with its sign-flipped twin, which cancels the leading
// oscillation of the imaginary part.
McComplexEstimate mc_symbol_estimate(const StoppedSampler& sampler, std::span<const double> xi,
                                     double t, std::size_t n, double radius, std::uint64_t seed,
                                     int workers = 1);

struct McRealEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t replicas = 0;
};

// (1 - E e^{-||X^sigma_t - y||^lambda}) / t, always in [0, 1/t].
McRealEstimate mc_h_estimate(const StoppedSampler& sampler, double lambda, double radius,
                             double t, std::size_t n, std::uint64_t seed, int workers = 1);

// A family of path laws indexed by starting points, simulated on dyadic grids.
struct PathFamily {
    std::vector<Vec> starts;
    std::function<paths::SamplePath(std::size_t start_index, double horizon, int level,
                                    std::uint64_t seed)>
        simulate;
    std::string label;
};

PathFamily levy_family(const levy::LevyModel& model, std::vector<Vec> starts);

struct TailEstimate {
    double value = 0.0;      // sup over starts and grid times of P(||X_t - x|| >= a)
    double std_error = 0.0;  // binomial standard error at the maximizer
    double argmax_time = 0.0;
    std::size_t argmax_start = 0;
};

// Monte Carlo estimate of sup_x sup_{t <= h} P^x(||X_t - x|| >= a) over the start grid
// and the dyadic time grid of the given level.
TailEstimate alpha_hr_estimate(const PathFamily& family, double h, double a, std::size_t n,
                               std::uint64_t seed, int level = 3, int workers = 1);

}  // namespace levyvar::symbols
