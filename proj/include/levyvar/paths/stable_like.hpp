#pragma once

#include <cstdint>
#include <functional>

#include "levyvar/paths/sample_path.hpp"

namespace levyvar::paths {

/// State-dependent stability index x -> a(x), with its declared range
/// 0 < a_lo <= a(x) <= a_hi < 1. The range is metadata used when selecting
/// applicable index formulas; each evaluation is validated against (0, 1).
struct StableLikeField {
    std::function<double(double)> a;
    double a_lo = 0.0;
    double a_hi = 0.0;
    std::string label;

    double at(double x) const;

    static StableLikeField constant_index(double a_value);
    static StableLikeField sin_modulated(double base, double amplitude);  // a(x)=base+amp*sin^2 x
};

/// Markov-chain approximation of the Feller process with symbol |xi|^{2a(x)}:
/// one step of size h adds h^{1/(2a(X))} times a standard symmetric 2a(X)-stable
/// draw. Scaling matches the symbol in the small-time limit.
SamplePath simulate_stable_like(const StableLikeField& field, double x0, const GridSpec& grid,
                                std::uint64_t seed);

}  // namespace levyvar::paths
