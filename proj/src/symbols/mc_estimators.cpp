#include "levyvar/symbols/mc_estimators.hpp"

#include <cmath>
#include <stdexcept>

#include "levyvar/core/parallel.hpp"
#include "levyvar/core/stats.hpp"
#include "levyvar/paths/simulate.hpp"

namespace levyvar::symbols {

namespace {

double dist_from(const Vec& x, const Vec& start) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - start[i];
        s += d * d;
    }
    return std::sqrt(s);
}

void require_mc_inputs(double t, std::size_t n, double radius) {
    if (!(t > 0.0)) throw std::invalid_argument("the estimator needs a positive time");
    if (n < 1000) throw std::invalid_argument("the estimator needs at least 1e3 replicas");
    if (!(radius > 0.0)) throw std::invalid_argument("the stopping radius must be positive");
}

}  // namespace

StoppedSampler stopped_levy_sampler(const levy::LevyModel& model, Vec start, int steps) {
    if (start.size() != model.dim()) throw std::invalid_argument("start dimension mismatch");
    if (steps < 1) throw std::invalid_argument("sampler needs at least one step");
    StoppedSampler s;
    s.start = start;
    s.mirrorable = model.mirrorable();
    s.label = model.label();
    s.draw = [model, start, steps](double horizon, double radius, std::uint64_t seed,
                                   bool mirror) {
        Rng rng(seed);
        Vec x = start;
        const double dt = horizon / steps;
        for (int i = 0; i < steps; ++i) {
            const Vec dz = model.sample_increment(dt, rng, mirror);
            for (std::size_t j = 0; j < x.size(); ++j) x[j] += dz[j];
            if (dist_from(x, start) > radius) break;
        }
        return x;
    };
    return s;
}

StoppedSampler stopped_sde_sampler(const paths::SdeModel& sde, int steps) {
    if (steps < 1) throw std::invalid_argument("sampler needs at least one step");
    StoppedSampler s;
    s.start = sde.x0;
    s.mirrorable = sde.driver.mirrorable();
    s.label = sde.label;
    s.draw = [sde, steps](double horizon, double radius, std::uint64_t seed, bool mirror) {
        Rng rng(seed);
        Vec x = sde.x0;
        const double dt = horizon / steps;
        for (int i = 0; i < steps; ++i) {
            const Vec dz = sde.driver.sample_increment(dt, rng, mirror);
            const Mat m = sde.phi.at(x);
            for (std::size_t r = 0; r < sde.phi.state_dim; ++r) {
                double inc = 0.0;
                for (std::size_t c = 0; c < sde.phi.driver_dim; ++c) inc += m(r, c) * dz[c];
                x[r] += inc;
            }
            if (dist_from(x, sde.x0) > radius) break;
        }
        return x;
    };
    return s;
}

StoppedSampler stopped_stable_like_sampler(const paths::StableLikeField& field, double start,
                                           int steps) {
    if (steps < 1) throw std::invalid_argument("sampler needs at least one step");
    StoppedSampler s;
    s.start = Vec{start};
    s.mirrorable = true;
    s.label = "stable-like[" + field.label + "]";
    s.draw = [field, start, steps](double horizon, double radius, std::uint64_t seed,
                                   bool mirror) {
        Rng rng(seed);
        double x = start;
        const double dt = horizon / steps;
        for (int i = 0; i < steps; ++i) {
            const double a = field.at(x);
            double jump = std::pow(dt, 1.0 / (2.0 * a)) * rng.sym_stable(2.0 * a);
            if (mirror) jump = -jump;
            x += jump;
            if (std::abs(x - start) > radius) break;
        }
        return Vec{x};
    };
    return s;
}

McComplexEstimate mc_symbol_estimate(const StoppedSampler& sampler, std::span<const double> xi,
                                     double t, std::size_t n, double radius, std::uint64_t seed,
                                     int workers) {
    require_mc_inputs(t, n, radius);
    if (xi.size() != sampler.start.size())
        throw std::invalid_argument("frequency dimension mismatch");

    struct Acc {
        OnlineStats re, im;
    };
    const Acc acc = chunked_reduce<Acc>(
        n, workers, [] { return Acc{}; },
        [&](Acc& a, std::uint64_t r) {
            const std::uint64_t s = derive_seed(seed, "mc-symbol", r);
            const Vec x = sampler.draw(t, radius, s, false);
            double phase = 0.0;
            for (std::size_t i = 0; i < xi.size(); ++i)
                phase += xi[i] * (x[i] - sampler.start[i]);
            double cr = std::cos(phase), ci = std::sin(phase);
            if (sampler.mirrorable) {
                const Vec xm = sampler.draw(t, radius, s, true);
                double pm = 0.0;
                for (std::size_t i = 0; i < xi.size(); ++i)
                    pm += xi[i] * (xm[i] - sampler.start[i]);
                cr = 0.5 * (cr + std::cos(pm));
                ci = 0.5 * (ci + std::sin(pm));
            }
            a.re.add(cr);
            a.im.add(ci);
        },
        [](Acc& a, const Acc& b) {
            a.re.merge(b.re);
            a.im.merge(b.im);
        });

    McComplexEstimate out;
    out.replicas = n;
    out.value = {-(acc.re.mean() - 1.0) / t, -acc.im.mean() / t};
    out.std_error =
        std::sqrt((acc.re.variance() + acc.im.variance()) / static_cast<double>(n)) / t;
    return out;
}

McRealEstimate mc_h_estimate(const StoppedSampler& sampler, double lambda, double radius,
                             double t, std::size_t n, std::uint64_t seed, int workers) {
    require_mc_inputs(t, n, radius);
    if (!(lambda > 0.0) || lambda > 2.0)
        throw std::invalid_argument("the estimator needs lambda in (0, 2]");

    const OnlineStats acc = chunked_reduce<OnlineStats>(
        n, workers, [] { return OnlineStats{}; },
        [&](OnlineStats& a, std::uint64_t r) {
            const std::uint64_t s = derive_seed(seed, "mc-h", r);
            const Vec x = sampler.draw(t, radius, s, false);
            a.add(std::exp(-std::pow(dist_from(x, sampler.start), lambda)));
        },
        [](OnlineStats& a, const OnlineStats& b) { a.merge(b); });

    McRealEstimate out;
    out.replicas = n;
    out.value = (1.0 - acc.mean()) / t;
    out.std_error = std::sqrt(acc.variance() / static_cast<double>(n)) / t;
    return out;
}

PathFamily levy_family(const levy::LevyModel& model, std::vector<Vec> starts) {
    for (const auto& s : starts)
        if (s.size() != model.dim()) throw std::invalid_argument("start dimension mismatch");
    PathFamily fam;
    fam.starts = std::move(starts);
    fam.label = model.label();
    fam.simulate = [model, starts = fam.starts](std::size_t idx, double horizon, int level,
                                                std::uint64_t seed) {
        paths::SamplePath p = paths::simulate_levy(model, paths::GridSpec{horizon, level}, seed);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.dim; ++j) p.values[i * p.dim + j] += starts[idx][j];
        return p;
    };
    return fam;
}

TailEstimate alpha_hr_estimate(const PathFamily& family, double h, double a, std::size_t n,
                               std::uint64_t seed, int level, int workers) {
    if (!(h > 0.0) || !(a > 0.0))
        throw std::invalid_argument("the tail estimator needs positive h and a");
    if (family.starts.empty()) throw std::invalid_argument("the family needs starting points");
    const std::size_t times = std::size_t{1} << level;

    TailEstimate out;
    for (std::size_t si = 0; si < family.starts.size(); ++si) {
        const auto counts = chunked_reduce<std::vector<std::uint64_t>>(
            n, workers, [&] { return std::vector<std::uint64_t>(times, 0); },
            [&](std::vector<std::uint64_t>& acc, std::uint64_t r) {
                const std::uint64_t s = derive_seed(seed, "alpha-hr", si * n + r);
                const paths::SamplePath p = family.simulate(si, h, level, s);
                for (std::size_t j = 1; j < p.size(); ++j) {
                    double d2 = 0.0;
                    for (std::size_t k = 0; k < p.dim; ++k) {
                        const double d = p.values[j * p.dim + k] - family.starts[si][k];
                        d2 += d * d;
                    }
                    if (d2 >= a * a) ++acc[j - 1];
                }
            },
            [](std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& b) {
                for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += b[j];
            });
        for (std::size_t j = 0; j < times; ++j) {
            const double p = static_cast<double>(counts[j]) / static_cast<double>(n);
            if (p > out.value) {
                out.value = p;
                out.argmax_start = si;
                out.argmax_time = h * static_cast<double>(j + 1) / static_cast<double>(times);
            }
        }
    }
    out.std_error = std::sqrt(out.value * (1.0 - out.value) / static_cast<double>(n));
    return out;
}

}  // namespace levyvar::symbols
