#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "levyvar/core/rng.hpp"
#include "levyvar/core/stats.hpp"
#include "levyvar/paths/bns.hpp"
#include "levyvar/paths/cogarch.hpp"
#include "levyvar/paths/gou.hpp"
#include "levyvar/paths/refinable.hpp"
#include "levyvar/paths/stable_like.hpp"
#include "levyvar/pvar/pvar.hpp"

using namespace levyvar;
using namespace levyvar::paths;

namespace {
const levy::LevyModel zero_model = levy::LevyModel::pure_drift(Vec{0.0});
}

TEST_CASE("gou with deterministic contraction follows the exponential decay") {
    const double gamma = 1.3, m = 0.5, x0 = 3.0;
    const GouModel model =
        GouModel::independent(levy::LevyModel::pure_drift(Vec{-gamma}), zero_model, m, x0);
    const SamplePath p = simulate_gou(model, GridSpec{1.0, 8}, 2, GouScheme::exp_drift);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double expect = m + (x0 - m) * std::exp(-gamma * p.times[i]);
        CHECK(p.values[i] == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("gou with zero reversion is the driving noise") {
    const GouModel model = GouModel::independent(zero_model, levy::LevyModel::brownian(), 7.0, 0.25);
    const GridSpec grid{1.0, 9};
    const SamplePath x = simulate_gou(model, grid, 44, GouScheme::euler);
    const SamplePath z = simulate_levy(model.joint, grid, 44);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(x.values[i] == doctest::Approx(0.25 + z.values[i * 2 + 1]).epsilon(1e-14));
}

TEST_CASE("exponential stepping refuses a random U") {
    const GouModel model =
        GouModel::independent(levy::LevyModel::brownian(), zero_model, 0.0, 1.0);
    CHECK_THROWS_AS(simulate_gou(model, GridSpec{1.0, 4}, 1, GouScheme::exp_drift),
                    std::invalid_argument);
}

TEST_CASE("gaussian ou closed form has the right variance at t=1") {
    const double gamma = 1.0, sigma = 1.0;
    OnlineStats end;
    for (int i = 0; i < 4000; ++i) {
        const SamplePath p =
            gaussian_ou_exact(gamma, sigma, 0.0, 0.0, GridSpec{1.0, 4}, derive_seed(9, "gou", i));
        end.add(p.values.back());
    }
    const double target = 0.4323323583816936;  // (1 - e^{-2}) / 2
    const double se = target * std::sqrt(2.0 / 4000.0);
    CHECK(std::abs(end.variance() - target) < 3.0 * se);
}

TEST_CASE("gaussian ou with zero reversion degenerates to brownian motion") {
    const SamplePath p = gaussian_ou_exact(0.0, 1.0, 0.0, 0.5, GridSpec{1.0, 10}, 5);
    CHECK(p.values.front() == 0.5);
    double q = 0.0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        const double d = p.values[i] - p.values[i - 1];
        q += d * d;
    }
    CHECK(q == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("bns volatility decays exactly without subordinator jumps") {
    const BnsModel model(zero_model, 1.3, 0.0, 0.0, 2.0);
    const SamplePath p = simulate_bns(model, GridSpec{1.0, 8}, 3);
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p.values[i * 3 + 0] == doctest::Approx(p.times[i]));
        CHECK(p.values[i * 3 + 1] ==
              doctest::Approx(2.0 * std::exp(-1.3 * p.times[i])).epsilon(1e-12));
    }
}

TEST_CASE("degenerate bns price is brownian motion") {
    const BnsModel model(zero_model, 0.0, 0.0, 0.0, 1.0);
    const SamplePath p = simulate_bns(model, GridSpec{1.0, 10}, 12);
    double q = 0.0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        CHECK(p.values[i * 3 + 1] == 1.0);  // volatility frozen at 1
        const double d = p.values[i * 3 + 2] - p.values[(i - 1) * 3 + 2];
        q += d * d;
    }
    CHECK(q == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("bns volatility matches the event-sum representation") {
    const auto sub = levy::LevyModel::compound_poisson(4.0, levy::JumpDist(levy::ExponentialJump{2.0}));
    const double alpha = 1.7, s0 = 0.8;
    const BnsModel model(sub, alpha, 0.1, 0.2, s0);
    const SamplePath p = simulate_bns(model, GridSpec{1.0, 9}, 77);
    // Independent evaluation: sigma2(t) = s0 e^{-at} + sum_{s<=t} jump e^{-a(t-s)}.
    for (std::size_t i = 0; i < p.size(); i += 37) {
        const double t = p.times[i];
        double v = s0 * std::exp(-alpha * t);
        for (const auto& j : p.jumps)
            if (j.time <= t) v += j.size[1] * std::exp(-alpha * (t - j.time));
        CHECK(p.values[i * 3 + 1] == doctest::Approx(v).epsilon(1e-10));
    }
}

TEST_CASE("bns volatility is level-independent on shared events") {
    const auto sub = levy::LevyModel::compound_poisson(3.0, levy::JumpDist(levy::ExponentialJump{1.0}));
    const BnsModel model(sub, 1.0, 0.0, 0.5, 1.0);
    const auto ref = make_bns_refinable(model, 1.0, 10, 15);
    const SamplePath fine = ref->at_level(10);
    const SamplePath mid = ref->at_level(8);
    for (std::size_t j = 0; j < mid.size(); ++j)
        CHECK(mid.values[j * 3 + 1] ==
              doctest::Approx(fine.values[(j << 2) * 3 + 1]).epsilon(1e-12));
}

TEST_CASE("bns rejects non-subordinator drivers") {
    CHECK_THROWS_AS(BnsModel(levy::LevyModel::brownian(), 1.0, 0, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BnsModel(levy::LevyModel::symmetric_stable(1.2), 1.0, 0, 0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        BnsModel(levy::LevyModel::compound_poisson(1.0, levy::JumpDist(levy::NormalJump{0, 1})),
                 1.0, 0, 0, 1.0),
        std::invalid_argument);
}

TEST_CASE("cogarch without jumps solves the volatility ode") {
    const CogarchModel model(zero_model, 0.9, 0.0, 1.0, 2.0);
    const SamplePath p = simulate_cogarch(model, GridSpec{1.0, 8}, 4);
    const double log_delta = std::log(0.9);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double t = p.times[i];
        const double expect = -1.0 / log_delta + (2.0 + 1.0 / log_delta) * std::pow(0.9, t);
        CHECK(p.values[i * 2 + 1] == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("cogarch sampler matches the exponential representation") {
    const auto driver = levy::LevyModel::compound_poisson(5.0, levy::JumpDist(levy::NormalJump{0, 1}));
    const CogarchModel model(driver, 0.95, 0.04, 1.0, 1.0);
    const GridSpec grid{1.0, 8};
    const std::uint64_t seed = 99;
    const SamplePath p = simulate_cogarch(model, grid, seed);

    // The driver's jump record regenerates from the same seed: events are drawn first.
    Rng rng(seed);
    std::vector<PathJump> events;
    for (const auto& e : driver.sample_jump_events(grid.horizon, rng))
        events.push_back({e.time, e.size});
    REQUIRE(events.size() == p.jumps.size());

    const std::vector<double> closed = cogarch_volatility_closed_form(model, p.times, events);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double got = p.values[i * 2 + 1];
        CHECK(std::abs(got - closed[i]) <= 1e-8 * std::abs(closed[i]));
    }
}

TEST_CASE("cogarch price variation stays bounded under refinement for finite-variation drivers") {
    const auto driver = levy::LevyModel::compound_poisson(6.0, levy::JumpDist(levy::UniformJump{-1, 1}));
    const CogarchModel model(driver, 0.9, 0.05, 1.0, 1.0);
    const auto ref = make_cogarch_refinable(model, 1.0, 12, 8);
    double prev = -1.0;
    for (const int level : {8, 10, 12}) {
        const SamplePath p = ref->at_level(level);
        const double v1 = pvar::pvar_exact(p.coordinate(0), 1.0).value;
        if (prev >= 0.0) CHECK(v1 <= prev * 1.05 + 1e-12);
        prev = v1;
    }
}

TEST_CASE("cogarch validates parameters") {
    CHECK_THROWS_AS(CogarchModel(zero_model, 1.0, 0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CogarchModel(zero_model, 0.9, -0.1, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CogarchModel(zero_model, 0.9, 0.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CogarchModel(levy::LevyModel::symmetric_stable(1.2), 0.9, 0.0, 1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("stable-like chain validates the index range") {
    CHECK_THROWS_AS(StableLikeField::constant_index(1.0), std::invalid_argument);
    CHECK_THROWS_AS(StableLikeField::sin_modulated(0.5, 0.5), std::invalid_argument);
    const StableLikeField f = StableLikeField::sin_modulated(0.3, 0.2);
    CHECK(f.at(0.0) == doctest::Approx(0.3));
    CHECK(f.a_hi == doctest::Approx(0.5));
}

TEST_CASE("constant-index stable-like chain matches the stable law at t=1") {
    // Characteristic-function two-sample check at the horizon.
    const double a = 0.6;  // alpha = 1.2
    const StableLikeField f = StableLikeField::constant_index(a);
    const int n = 4000;
    OnlineStats chain_cos, exact_cos;
    for (int i = 0; i < n; ++i) {
        const SamplePath p =
            simulate_stable_like(f, 0.0, GridSpec{1.0, 6}, derive_seed(3, "sl-chain", i));
        chain_cos.add(std::cos(p.values.back()));
        Rng rng(derive_seed(3, "sl-exact", i));
        exact_cos.add(std::cos(rng.sym_stable(2.0 * a)));
    }
    const double se = std::sqrt(chain_cos.variance() / n + exact_cos.variance() / n);
    CHECK(std::abs(chain_cos.mean() - exact_cos.mean()) < 4.0 * se + 1e-3);
}
