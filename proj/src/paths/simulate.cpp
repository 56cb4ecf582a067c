#include "levyvar/paths/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

namespace levyvar::paths {

namespace {

// Drift, Gaussian part and the non-enumerable jump components; the enumerable ones
// are carried by the event list instead.
levy::LevyModel diffuse_part(const levy::LevyModel& m) {
    std::vector<levy::JumpComponent> rest;
    for (const auto& c : m.jumps())
        if (!std::holds_alternative<levy::CompoundPoisson>(c) &&
            !std::holds_alternative<levy::FiniteAtomic>(c))
            rest.push_back(c);
    return levy::LevyModel(m.path_drift(), m.gaussian(), std::move(rest), m.label());
}

}  // namespace

DriverIncrements sample_driver_increments(const levy::LevyModel& m, const GridSpec& grid,
                                          Rng& rng) {
    grid.validate();
    const std::size_t n = grid.steps();
    const std::size_t d = m.dim();
    const double dt = grid.mesh();

    const auto events = m.sample_jump_events(grid.horizon, rng);
    const levy::LevyModel diffuse = diffuse_part(m);

    DriverIncrements out;
    out.dim = d;
    out.increments.assign(n * d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec inc = diffuse.sample_increment(dt, rng);
        for (std::size_t k = 0; k < d; ++k) out.increments[i * d + k] = inc[k];
    }
    for (const auto& e : events) {
        const std::size_t cell = std::min<std::size_t>(
            static_cast<std::size_t>(e.time / dt), n - 1);
        for (std::size_t k = 0; k < d; ++k) out.increments[cell * d + k] += e.size[k];
        out.jumps.push_back({e.time, e.size});
    }
    return out;
}

SamplePath simulate_levy(const levy::LevyModel& m, const GridSpec& grid, std::uint64_t seed) {
    Rng rng(seed);
    const DriverIncrements inc = sample_driver_increments(m, grid, rng);
    const std::size_t n = grid.steps();
    const std::size_t d = m.dim();

    SamplePath p;
    p.times = grid.times();
    p.dim = d;
    p.scheme = "levy-exact";
    p.seed = seed;
    p.jumps = inc.jumps;
    p.values.assign((n + 1) * d, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d; ++k)
            p.values[(i + 1) * d + k] = p.values[i * d + k] + inc.increments[i * d + k];
    return p;
}

SamplePath simulate_sde_euler(const SdeModel& sde, const GridSpec& grid, std::uint64_t seed,
                              double explosion_cap) {
    Rng rng(seed);
    const DriverIncrements inc = sample_driver_increments(sde.driver, grid, rng);
    SamplePath p = sde_euler_from_increments(sde, grid, inc, explosion_cap);
    p.seed = seed;
    return p;
}

SamplePath sde_euler_from_increments(const SdeModel& sde, const GridSpec& grid,
                                     const DriverIncrements& inc, double explosion_cap) {
    grid.validate();
    const std::size_t n = grid.steps();
    const std::size_t d = sde.phi.state_dim;
    const std::size_t dd = sde.phi.driver_dim;

    if (inc.dim != dd || inc.increments.size() != n * dd)
        throw std::invalid_argument("driver increments do not match the grid");

    SamplePath p;
    p.times = grid.times();
    p.dim = d;
    p.scheme = "sde-euler";
    p.values.assign((n + 1) * d, 0.0);
    for (std::size_t k = 0; k < d; ++k) p.values[k] = sde.x0[k];

    Vec x = sde.x0;
    bool frozen = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!frozen) {
            const Mat phi = sde.phi.at(x);
            Vec dl(dd);
            for (std::size_t k = 0; k < dd; ++k) dl[k] = inc.increments[i * dd + k];
            const Vec dx = phi.mul(dl);
            for (std::size_t k = 0; k < d; ++k) x[k] += dx[k];
            if (norm2(x) > explosion_cap) {
                frozen = true;
                p.status = PathStatus::truncated;
                p.warnings.push_back("state exceeded explosion cap at t=" +
                                     std::to_string(p.times[i + 1]) + "; path frozen");
            }
        }
        for (std::size_t k = 0; k < d; ++k) p.values[(i + 1) * d + k] = x[k];
    }
    return p;
}

DriverIncrements coarsen_increments(const DriverIncrements& fine, int fine_level, int level) {
    if (level < 1 || level > fine_level) throw std::invalid_argument("bad coarsening level");
    const std::size_t d = fine.dim;
    const std::size_t stride = static_cast<std::size_t>(1) << (fine_level - level);
    const std::size_t n_fine = fine.increments.size() / d;
    if (n_fine != (static_cast<std::size_t>(1) << fine_level))
        throw std::invalid_argument("increment count does not match the stated fine level");

    DriverIncrements out;
    out.dim = d;
    out.jumps = fine.jumps;
    out.increments.assign((n_fine >> (fine_level - level)) * d, 0.0);
    for (std::size_t j = 0; j < out.increments.size() / d; ++j)
        for (std::size_t s = 0; s < stride; ++s)
            for (std::size_t k = 0; k < d; ++k)
                out.increments[j * d + k] += fine.increments[(j * stride + s) * d + k];
    return out;
}

}  // namespace levyvar::paths
