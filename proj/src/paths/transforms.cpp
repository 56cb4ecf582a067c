#include "levyvar/paths/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levyvar::paths {

SamplePath stochastic_exponential(const SamplePath& z, double qv_rate) {
    z.check_consistent();
    if (z.dim != 1) throw std::invalid_argument("stochastic exponential needs a scalar path");
    if (qv_rate < 0.0) throw std::invalid_argument("quadratic variation rate must be >= 0");

    SamplePath e;
    e.times = z.times;
    e.dim = 1;
    e.scheme = "doleans-dade";
    e.seed = z.seed;
    e.values.resize(z.size());

    const double z0 = z.values.front();
    const double t0 = z.times.front();
    double jump_product = 1.0;
    bool absorbed = false;
    bool warned = false;
    std::size_t jp = 0;

    for (std::size_t i = 0; i < z.size(); ++i) {
        const double t = z.times[i];
        while (jp < z.jumps.size() && z.jumps[jp].time <= t) {
            const double dz = z.jumps[jp].size.at(0);
            if (dz == -1.0) absorbed = true;
            else {
                if (dz < -1.0 && !warned) {
                    e.warnings.push_back("jump below -1: exponential changes sign");
                    warned = true;
                }
                jump_product *= (1.0 + dz) * std::exp(-dz);
            }
            ++jp;
        }
        if (absorbed) {
            e.values[i] = 0.0;
            continue;
        }
        const double cont = z.values[i] - z0 - 0.5 * qv_rate * (t - t0);
        e.values[i] = std::exp(cont) * jump_product;
    }
    return e;
}

SamplePath time_change(const SamplePath& x, const std::vector<double>& out_times,
                       const std::function<double(double)>& clock) {
    x.check_consistent();
    if (!clock) throw std::invalid_argument("time change needs a clock function");
    if (out_times.size() < 2) throw std::invalid_argument("time change needs >= 2 output times");

    std::vector<double> taus(out_times.size());
    double prev = -1.0;
    const double horizon = x.times.back();
    const double slack = 1e-12 * std::max(1.0, horizon);
    for (std::size_t i = 0; i < out_times.size(); ++i) {
        double c = clock(out_times[i]);
        if (i == 0 && c != 0.0) throw std::invalid_argument("clock(0) must be 0");
        if (c < prev) throw std::invalid_argument("clock must be nondecreasing");
        if (c > horizon + slack) throw std::invalid_argument("clock exceeds the path horizon");
        prev = c;
        taus[i] = std::min(c, horizon);
    }

    SamplePath y;
    y.times = out_times;
    y.dim = x.dim;
    y.scheme = "time-change";
    y.seed = x.seed;
    y.values.resize(out_times.size() * x.dim);
    for (std::size_t i = 0; i < taus.size(); ++i) {
        auto it = std::upper_bound(x.times.begin(), x.times.end(), taus[i]);
        const std::size_t j = static_cast<std::size_t>(it - x.times.begin()) - 1;
        for (std::size_t k = 0; k < x.dim; ++k) y.values[i * x.dim + k] = x.values[j * x.dim + k];
    }
    y.check_consistent();
    return y;
}

}  // namespace levyvar::paths
