#include "levyvar/paths/bns.hpp"

#include <cmath>
#include <stdexcept>
#include <variant>

#include "levyvar/core/rng.hpp"

namespace levyvar::paths {

namespace {

bool nonneg_dist(const levy::JumpDist& d) {
    return std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, levy::ConstantJump>) return s.value >= 0.0;
            else if constexpr (std::is_same_v<T, levy::ExponentialJump>) return true;
            else if constexpr (std::is_same_v<T, levy::UniformJump>) return s.lo >= 0.0;
            else return false;  // normal jumps are unbounded below
        },
        d.spec());
}

// Nondecreasing paths with enumerable jumps: nonnegative drift, no Gaussian part,
// compound Poisson / atomic components with nonnegative jumps.
void require_subordinator(const levy::LevyModel& m) {
    if (m.dim() != 1) throw std::invalid_argument("bns: subordinator must be scalar");
    if (m.path_drift()[0] < 0.0)
        throw std::invalid_argument("bns: subordinator drift must be >= 0");
    if (m.has_gaussian_part())
        throw std::invalid_argument("bns: subordinator cannot have a Gaussian part");
    for (const auto& c : m.jumps()) {
        const bool ok = std::visit(
            [](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, levy::CompoundPoisson>)
                    return nonneg_dist(s.dist);
                else if constexpr (std::is_same_v<T, levy::FiniteAtomic>) {
                    for (const auto& atom : s.atoms)
                        if (atom.jump[0] < 0.0) return false;
                    return true;
                } else
                    return false;  // stable/gamma jumps are not enumerable here
            },
            c);
        if (!ok)
            throw std::invalid_argument(
                "bns: subordinator needs enumerable nonnegative jumps");
    }
}

}  // namespace

BnsModel::BnsModel(levy::LevyModel subordinator_, double alpha_rate_, double mu_, double b_,
                   double sigma0_sq_)
    : subordinator(std::move(subordinator_)),
      alpha_rate(alpha_rate_),
      mu(mu_),
      b(b_),
      sigma0_sq(sigma0_sq_) {
    require_subordinator(subordinator);
    if (alpha_rate < 0.0) throw std::invalid_argument("bns: alpha must be >= 0");
    if (sigma0_sq < 0.0) throw std::invalid_argument("bns: sigma0^2 must be >= 0");
}

SamplePath bns_from_inputs(const BnsModel& model, const GridSpec& grid,
                           const std::vector<PathJump>& events, std::span<const double> dw) {
    grid.validate();
    const std::size_t n = grid.steps();
    if (dw.size() != n) throw std::invalid_argument("bns: need one Brownian increment per cell");
    const double dt = grid.mesh();
    const double a = model.alpha_rate;
    // Continuous inflow of L_{alpha t}: subordinator drift d gives dv = a (d - v) dt.
    const double level = model.subordinator.path_drift()[0];

    auto decay_to = [&](double v, double span) {
        if (a == 0.0) return v;
        return level + (v - level) * std::exp(-a * span);
    };

    SamplePath p;
    p.times = grid.times();
    p.dim = 3;
    p.scheme = "bns";
    p.values.resize((n + 1) * 3);

    double v = model.sigma0_sq;
    double g = 0.0;
    p.values[0] = 0.0;
    p.values[1] = v;
    p.values[2] = g;

    std::size_t ev = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t_lo = p.times[i];
        const double t_hi = p.times[i + 1];
        // G reads the volatility at the left grid endpoint.
        if (v < 0.0) throw std::logic_error("bns: volatility went negative");
        g += (model.mu + model.b * v) * dt + std::sqrt(v) * dw[i];
        double t_cur = t_lo;
        while (ev < events.size() && events[ev].time <= t_hi) {
            v = decay_to(v, events[ev].time - t_cur);
            v += events[ev].size.at(0);
            t_cur = events[ev].time;
            ++ev;
        }
        v = decay_to(v, t_hi - t_cur);
        p.values[(i + 1) * 3 + 0] = t_hi;
        p.values[(i + 1) * 3 + 1] = v;
        p.values[(i + 1) * 3 + 2] = g;
    }
    for (const auto& e : events) p.jumps.push_back({e.time, Vec{0.0, e.size.at(0), 0.0}});
    return p;
}

SamplePath simulate_bns(const BnsModel& model, const GridSpec& grid, std::uint64_t seed) {
    grid.validate();
    Rng rng(seed);
    std::vector<PathJump> events;
    if (model.alpha_rate > 0.0) {
        const auto raw =
            model.subordinator.sample_jump_events(model.alpha_rate * grid.horizon, rng);
        for (const auto& e : raw) events.push_back({e.time / model.alpha_rate, e.size});
    }
    const std::size_t n = grid.steps();
    const double root_dt = std::sqrt(grid.mesh());
    std::vector<double> dw(n);
    for (auto& x : dw) x = root_dt * rng.gaussian();
    SamplePath p = bns_from_inputs(model, grid, events, dw);
    p.seed = seed;
    return p;
}

}  // namespace levyvar::paths
