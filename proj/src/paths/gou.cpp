#include "levyvar/paths/gou.hpp"

#include <cmath>
#include <stdexcept>
#include <variant>

#include "levyvar/core/rng.hpp"
#include "levyvar/paths/simulate.hpp"

namespace levyvar::paths {

namespace {

// True when the U coordinate (axis 0) carries drift only.
bool u_deterministic(const levy::LevyModel& joint) {
    const Mat& q = joint.gaussian();
    if (q(0, 0) != 0.0 || q(0, 1) != 0.0) return false;
    for (const auto& c : joint.jumps()) {
        const bool touches_u = std::visit(
            [](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, levy::FiniteAtomic>) {
                    for (const auto& atom : s.atoms)
                        if (atom.jump[0] != 0.0) return true;
                    return false;
                } else {
                    return s.axis == 0;
                }
            },
            c);
        if (touches_u) return false;
    }
    return true;
}

}  // namespace

GouModel::GouModel(levy::LevyModel joint_, double mean_level_, double x0_)
    : joint(std::move(joint_)), mean_level(mean_level_), x0(x0_) {
    if (joint.dim() != 2) throw std::invalid_argument("gou: joint driver must be 2-dim (U, L)");
}

GouModel GouModel::independent(const levy::LevyModel& u, const levy::LevyModel& l,
                               double mean_level, double x0) {
    if (u.dim() != 1 || l.dim() != 1)
        throw std::invalid_argument("gou: U and L must be scalar models");
    return GouModel(levy::LevyModel::product({u, l}, "gou-driver"), mean_level, x0);
}

SamplePath simulate_gou(const GouModel& model, const GridSpec& grid, std::uint64_t seed,
                        GouScheme scheme, double explosion_cap) {
    grid.validate();
    if (scheme == GouScheme::exp_drift && !u_deterministic(model.joint))
        throw std::invalid_argument("gou: exponential stepping needs a deterministic U");

    Rng rng(seed);
    const DriverIncrements inc = sample_driver_increments(model.joint, grid, rng);
    const std::size_t n = grid.steps();
    const double dt = grid.mesh();
    const double m = model.mean_level;
    const double u_rate = model.joint.path_drift()[0];
    const double decay = std::exp(u_rate * dt);

    SamplePath p;
    p.times = grid.times();
    p.dim = 1;
    p.scheme = scheme == GouScheme::euler ? "gou-euler" : "gou-exp";
    p.seed = seed;
    p.values.resize(n + 1);
    p.values[0] = model.x0;

    double x = model.x0;
    bool frozen = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!frozen) {
            const double du = inc.increments[i * 2];
            const double dl = inc.increments[i * 2 + 1];
            if (scheme == GouScheme::euler) x += (x - m) * du + dl;
            else x = m + (x - m) * decay + dl;
            if (std::abs(x) > explosion_cap) {
                frozen = true;
                p.status = PathStatus::truncated;
                p.warnings.push_back("state exceeded explosion cap; path frozen");
            }
        }
        p.values[i + 1] = x;
    }
    return p;
}

SamplePath gaussian_ou_exact(double gamma, double sigma, double mean_level, double x0,
                             const GridSpec& grid, std::uint64_t seed) {
    grid.validate();
    if (sigma < 0.0) throw std::invalid_argument("gou: sigma must be >= 0");
    Rng rng(seed);
    const std::size_t n = grid.steps();
    const std::vector<double> times = grid.times();

    auto tau = [gamma](double t) {
        return gamma == 0.0 ? t : std::expm1(2.0 * gamma * t) / (2.0 * gamma);
    };

    SamplePath p;
    p.times = times;
    p.dim = 1;
    p.scheme = "gaussian-ou-exact";
    p.seed = seed;
    p.values.resize(n + 1);

    double w = 0.0;  // Brownian path read at the tau-times
    double tau_prev = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = times[i];
        if (i > 0) {
            const double tau_t = tau(t);
            w += std::sqrt(tau_t - tau_prev) * rng.gaussian();
            tau_prev = tau_t;
        }
        const double e = std::exp(-gamma * t);
        p.values[i] = mean_level * (1.0 - e) + x0 * e + sigma * e * w;
    }
    return p;
}

}  // namespace levyvar::paths
