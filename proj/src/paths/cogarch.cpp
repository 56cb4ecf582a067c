#include "levyvar/paths/cogarch.hpp"

#include <cmath>
#include <stdexcept>

#include "levyvar/core/rng.hpp"

namespace levyvar::paths {

CogarchModel::CogarchModel(levy::LevyModel driver_, double delta_, double lam_, double b_,
                           double sigma0_sq_)
    : driver(std::move(driver_)), delta(delta_), lam(lam_), b(b_), sigma0_sq(sigma0_sq_) {
    if (driver.dim() != 1) throw std::invalid_argument("cogarch: driver must be scalar");
    if (!driver.jumps_enumerable())
        throw std::invalid_argument("cogarch: driver jumps must be enumerable");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("cogarch: delta must lie in (0, 1)");
    if (lam < 0.0) throw std::invalid_argument("cogarch: lam must be >= 0");
    if (!(b > 0.0)) throw std::invalid_argument("cogarch: b must be positive");
    if (sigma0_sq < 0.0) throw std::invalid_argument("cogarch: sigma0^2 must be >= 0");
}

SamplePath cogarch_from_inputs(const CogarchModel& model, const GridSpec& grid,
                               const std::vector<PathJump>& events, std::span<const double> dw) {
    grid.validate();
    const std::size_t n = grid.steps();
    const bool gaussian = model.driver.has_gaussian_part();
    if (gaussian && dw.size() != n)
        throw std::invalid_argument("cogarch: need one Brownian increment per cell");
    const double dt = grid.mesh();
    const double log_delta = std::log(model.delta);
    const double level = -model.b / log_delta;  // stationary point of the volatility ODE
    const double drift = model.driver.path_drift()[0];
    const double vol_coeff = std::sqrt(model.driver.gaussian()(0, 0));

    auto decay_to = [&](double v, double span) {
        return level + (v - level) * std::pow(model.delta, span);
    };

    SamplePath p;
    p.times = grid.times();
    p.dim = 2;
    p.scheme = "cogarch";
    p.values.resize((n + 1) * 2);

    double v = model.sigma0_sq;
    double g = 0.0;
    p.values[0] = g;
    p.values[1] = v;

    std::size_t ev = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t_hi = p.times[i + 1];
        // Euler contribution of the continuous driver part, sigma at the left endpoint.
        const double sigma_left_cell = std::sqrt(v);
        g += sigma_left_cell * drift * dt;
        if (gaussian) g += sigma_left_cell * vol_coeff * dw[i];
        double t_cur = p.times[i];
        while (ev < events.size() && events[ev].time <= t_hi) {
            v = decay_to(v, events[ev].time - t_cur);
            const double sigma_left = std::sqrt(v);
            const double dl = events[ev].size.at(0);
            const double dg = sigma_left * dl;
            g += dg;
            v += (model.lam / model.delta) * v * dl * dl;
            p.jumps.push_back({events[ev].time, Vec{dg, (model.lam / model.delta) *
                                                           sigma_left * sigma_left * dl * dl}});
            t_cur = events[ev].time;
            ++ev;
        }
        v = decay_to(v, t_hi - t_cur);
        p.values[(i + 1) * 2 + 0] = g;
        p.values[(i + 1) * 2 + 1] = v;
    }
    return p;
}

SamplePath simulate_cogarch(const CogarchModel& model, const GridSpec& grid, std::uint64_t seed) {
    grid.validate();
    Rng rng(seed);
    std::vector<PathJump> events;
    for (const auto& e : model.driver.sample_jump_events(grid.horizon, rng))
        events.push_back({e.time, e.size});
    std::vector<double> dw;
    if (model.driver.has_gaussian_part()) {
        const double root_dt = std::sqrt(grid.mesh());
        dw.resize(grid.steps());
        for (auto& x : dw) x = root_dt * rng.gaussian();
    }
    SamplePath p = cogarch_from_inputs(model, grid, events, dw);
    p.seed = seed;
    return p;
}

std::vector<double> cogarch_volatility_closed_form(const CogarchModel& model,
                                                   const std::vector<double>& times,
                                                   const std::vector<PathJump>& driver_jumps) {
    const double m = -std::log(model.delta);  // slope of A between jumps, positive
    std::vector<double> out(times.size());

    // Accumulate A and int_0^t e^{A_s} ds across the merged stream of jump times
    // and evaluation times. Exact piecewise: between jumps A is linear with slope m.
    std::size_t jp = 0;
    double a_cur = 0.0;      // A at t_cur (right limit)
    double integral = 0.0;   // int_0^{t_cur} e^{A_s} ds
    double t_cur = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        while (jp < driver_jumps.size() && driver_jumps[jp].time <= t) {
            const double s = driver_jumps[jp].time;
            integral += std::exp(a_cur) * std::expm1(m * (s - t_cur)) / m;
            a_cur += m * (s - t_cur);
            const double dl = driver_jumps[jp].size.at(0);
            a_cur -= std::log1p((model.lam / model.delta) * dl * dl);
            t_cur = s;
            ++jp;
        }
        integral += std::exp(a_cur) * std::expm1(m * (t - t_cur)) / m;
        a_cur += m * (t - t_cur);
        t_cur = t;
        out[i] = (model.b * integral + model.sigma0_sq) * std::exp(-a_cur);
    }
    return out;
}

}  // namespace levyvar::paths
