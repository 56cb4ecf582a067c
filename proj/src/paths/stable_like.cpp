#include "levyvar/paths/stable_like.hpp"

#include <cmath>
#include <stdexcept>

#include "levyvar/core/rng.hpp"

namespace levyvar::paths {

double StableLikeField::at(double x) const {
    if (!a) throw std::invalid_argument("stable-like field is empty");
    const double v = a(x);
    if (!(v > 0.0) || !(v < 1.0))
        throw std::invalid_argument("stable-like index a(x) must lie in (0, 1)");
    return v;
}

StableLikeField StableLikeField::constant_index(double a_value) {
    if (!(a_value > 0.0) || !(a_value < 1.0))
        throw std::invalid_argument("stable-like index must lie in (0, 1)");
    StableLikeField f;
    f.a = [a_value](double) { return a_value; };
    f.a_lo = a_value;
    f.a_hi = a_value;
    f.label = "a-const";
    return f;
}

StableLikeField StableLikeField::sin_modulated(double base, double amplitude) {
    if (!(base > 0.0) || amplitude < 0.0 || !(base + amplitude < 1.0))
        throw std::invalid_argument("sin-modulated index must stay within (0, 1)");
    StableLikeField f;
    f.a = [base, amplitude](double x) {
        const double s = std::sin(x);
        return base + amplitude * s * s;
    };
    f.a_lo = base;
    f.a_hi = base + amplitude;
    f.label = "a-sin";
    return f;
}

SamplePath simulate_stable_like(const StableLikeField& field, double x0, const GridSpec& grid,
                                std::uint64_t seed) {
    grid.validate();
    Rng rng(seed);
    const std::size_t n = grid.steps();
    const double h = grid.mesh();

    SamplePath p;
    p.times = grid.times();
    p.dim = 1;
    p.scheme = "stable-like-chain";
    p.seed = seed;
    p.values.resize(n + 1);
    p.values[0] = x0;
    double x = x0;
    for (std::size_t i = 0; i < n; ++i) {
        const double alpha = 2.0 * field.at(x);
        x += std::pow(h, 1.0 / alpha) * rng.sym_stable(alpha);
        p.values[i + 1] = x;
    }
    return p;
}

}  // namespace levyvar::paths
