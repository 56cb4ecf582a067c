#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "levyvar/core/rng.hpp"
#include "levyvar/core/stats.hpp"
#include "levyvar/paths/cantor.hpp"
#include "levyvar/paths/refinable.hpp"
#include "levyvar/paths/sample_path.hpp"
#include "levyvar/paths/simulate.hpp"
#include "levyvar/paths/transforms.hpp"
#include "levyvar/pvar/pvar.hpp"

using namespace levyvar;
using namespace levyvar::paths;

TEST_CASE("grid spec times and validation") {
    const GridSpec g{1.0, 3};
    const auto t = g.times();
    REQUIRE(t.size() == 9);
    CHECK(t.front() == 0.0);
    CHECK(t.back() == 1.0);
    CHECK(t[1] == doctest::Approx(0.125));
    CHECK_THROWS_AS((GridSpec{0.0, 3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{1.0, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{1.0, 27}.validate()), std::invalid_argument);
}

TEST_CASE("drift-only path is the linear ramp") {
    const auto m = levy::LevyModel::pure_drift(Vec{1.0});
    const SamplePath p = simulate_levy(m, GridSpec{1.0, 3}, 1);
    REQUIRE(p.size() == 9);
    for (std::size_t i = 0; i < 9; ++i)
        CHECK(p.values[i] == doctest::Approx(0.125 * double(i)).epsilon(1e-15));
}

TEST_CASE("brownian quadratic sum concentrates at the horizon") {
    const SamplePath p = simulate_levy(levy::LevyModel::brownian(), GridSpec{1.0, 10}, 21);
    double q = 0.0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        const double d = p.values[i] - p.values[i - 1];
        q += d * d;
    }
    CHECK(q == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("compound poisson jump counts have the right mean") {
    const auto m = levy::LevyModel::compound_poisson(3.0, levy::JumpDist(levy::ConstantJump{1.0}));
    OnlineStats count;
    for (int i = 0; i < 10000; ++i) {
        const SamplePath p = simulate_levy(m, GridSpec{1.0, 2}, derive_seed(500, "cp-count", i));
        count.add(double(p.jumps.size()));
    }
    CHECK(count.mean() == doctest::Approx(3.0).epsilon(0.02));
}

TEST_CASE("pure-jump path ends at the sum of its jumps") {
    const auto m = levy::LevyModel::compound_poisson(5.0, levy::JumpDist(levy::NormalJump{0.0, 1.0}));
    const SamplePath p = simulate_levy(m, GridSpec{1.0, 6}, 9);
    double sum = 0.0;
    for (const auto& j : p.jumps) sum += j.size[0];
    CHECK(p.values.back() == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("csv and binary serialization round-trip") {
    const SamplePath p = simulate_levy(
        levy::LevyModel::product({levy::LevyModel::brownian(), levy::LevyModel::brownian()}, "bm2"),
        GridSpec{1.0, 4}, 77);

    std::stringstream csv;
    write_csv(p, csv);
    const SamplePath pc = read_csv(csv);
    REQUIRE(pc.dim == 2);
    REQUIRE(pc.size() == p.size());
    for (std::size_t i = 0; i < p.values.size(); ++i)
        CHECK(pc.values[i] == p.values[i]);  // full-precision text round-trip

    std::stringstream bin1, bin2;
    write_binary(p, bin1);
    write_binary(p, bin2);
    CHECK(bin1.str() == bin2.str());  // byte-identical rewrites
    const SamplePath pb = read_binary(bin1);
    CHECK(pb.dim == p.dim);
    CHECK(pb.times == p.times);
    CHECK(pb.values == p.values);

    std::stringstream bad("XXXX no");
    CHECK_THROWS(read_binary(bad));
}

TEST_CASE("same seed gives bit-identical paths") {
    const auto m = levy::LevyModel::product(
        {levy::LevyModel::symmetric_stable(1.2),
         levy::LevyModel::compound_poisson(2.0, levy::JumpDist(levy::ExponentialJump{1.0}))},
        "mix");
    const SamplePath a = simulate_levy(m, GridSpec{1.0, 8}, 123);
    const SamplePath b = simulate_levy(m, GridSpec{1.0, 8}, 123);
    CHECK(a.values == b.values);
    CHECK(a.jumps.size() == b.jumps.size());
}

TEST_CASE("levy refinement restriction is exact") {
    const auto m = levy::LevyModel::product(
        {levy::LevyModel::brownian(),
         levy::LevyModel::compound_poisson(4.0, levy::JumpDist(levy::NormalJump{0, 1}))},
        "bm-cp");
    const auto ref = make_levy_refinable(m, 1.0, 10, 321);
    const SamplePath fine = ref->at_level(10);
    const SamplePath mid = ref->at_level(7);
    const GridSpec g7{1.0, 7};
    CHECK(mid.times == g7.times());  // bitwise: restriction reproduces the level grid
    for (std::size_t j = 0; j < mid.size(); ++j)
        for (std::size_t k = 0; k < 2; ++k)
            CHECK(mid.values[j * 2 + k] == fine.values[(j << 3) * 2 + k]);
}

TEST_CASE("zero coefficient field freezes the state") {
    const SdeModel sde(CoeffField::constant(Mat(1, 1), "zero"), levy::LevyModel::brownian(),
                       Vec{2.5}, "frozen");
    const SamplePath p = simulate_sde_euler(sde, GridSpec{1.0, 5}, 3);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.values[i] == 2.5);
}

TEST_CASE("euler on the linear sde converges strongly to the exponential") {
    // dX = X dW against X_t = x exp(W_t - t/2), same Brownian path at both levels.
    const auto bm = levy::LevyModel::brownian();
    Rng rng(1234);
    const GridSpec fine{1.0, 14};
    const DriverIncrements inc14 = sample_driver_increments(bm, fine, rng);
    const DriverIncrements inc10 = coarsen_increments(inc14, 14, 10);
    const SdeModel sde(CoeffField::linear_1d(), bm, Vec{1.0}, "gbm");

    auto max_err = [&](const GridSpec& g, const DriverIncrements& inc) {
        const SamplePath e = sde_euler_from_increments(sde, g, inc);
        double w = 0.0, worst = 0.0;
        for (std::size_t i = 0; i < g.steps(); ++i) {
            w += inc.increments[i];
            const double t = e.times[i + 1];
            worst = std::max(worst, std::abs(e.values[i + 1] - std::exp(w - 0.5 * t)));
        }
        return worst;
    };

    const double err10 = max_err(GridSpec{1.0, 10}, inc10);
    const double err14 = max_err(fine, inc14);
    INFO("err10=", err10, " err14=", err14);
    CHECK(err14 < err10 / 3.0);
}

TEST_CASE("projection sde solves exactly as shifted driver coordinates") {
    const auto driver = levy::LevyModel::product(
        {levy::LevyModel::pure_drift(Vec{1.0}), levy::LevyModel::symmetric_stable(1.2),
         levy::LevyModel::brownian()},
        "tzw");
    const GridSpec grid{1.0, 8};
    const SamplePath z = simulate_levy(driver, grid, 55);
    const SdeModel sde(CoeffField::projection_12_of_3(), driver, Vec{0.0, 0.0}, "proj");
    const SamplePath x = simulate_sde_euler(sde, grid, 55);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(x.values[i * 2 + 0] == z.values[i * 3 + 0]);  // t + x1, exact
        CHECK(x.values[i * 2 + 1] == z.values[i * 3 + 1]);  // Z_t + x2, exact
    }
}

TEST_CASE("explosion cap truncates instead of overflowing") {
    Mat big(1, 1);
    big(0, 0) = 1e13;
    const SdeModel sde(CoeffField::constant(big, "huge"), levy::LevyModel::pure_drift(Vec{1.0}),
                       Vec{0.0}, "explode");
    const SamplePath p = simulate_sde_euler(sde, GridSpec{1.0, 2}, 1);
    CHECK(p.status == PathStatus::truncated);
    CHECK(!p.warnings.empty());
    CHECK(p.values.back() == p.values[1]);  // frozen after the first step
}

TEST_CASE("stochastic exponential closed forms") {
    // Z identically zero.
    SamplePath zero;
    zero.times = GridSpec{1.0, 4}.times();
    zero.values.assign(zero.times.size(), 0.0);
    zero.dim = 1;
    const SamplePath e0 = stochastic_exponential(zero, 0.0);
    for (const double v : e0.values) CHECK(v == doctest::Approx(1.0));

    // Brownian driver: exp(W_t - t/2).
    const SamplePath w = simulate_levy(levy::LevyModel::brownian(), GridSpec{1.0, 10}, 17);
    const SamplePath ew = stochastic_exponential(w, 1.0);
    for (std::size_t i = 0; i < w.size(); ++i)
        CHECK(ew.values[i] ==
              doctest::Approx(std::exp(w.values[i] - 0.5 * w.times[i])).epsilon(1e-12));

    // One jump of +0.5: price 1 before, 1.5 after.
    SamplePath j;
    j.times = {0.0, 0.25, 0.5, 0.75, 1.0};
    j.values = {0.0, 0.0, 0.5, 0.5, 0.5};
    j.dim = 1;
    j.jumps.push_back({0.4, Vec{0.5}});
    const SamplePath ej = stochastic_exponential(j, 0.0);
    CHECK(ej.values[1] == doctest::Approx(1.0));
    CHECK(ej.values[2] == doctest::Approx(1.5));
    CHECK(ej.values[4] == doctest::Approx(1.5));
}

TEST_CASE("stochastic exponential absorbs at -1 and warns below") {
    SamplePath z;
    z.times = {0.0, 0.5, 1.0};
    z.values = {0.0, -1.0, -1.0};
    z.dim = 1;
    z.jumps.push_back({0.3, Vec{-1.0}});
    const SamplePath e = stochastic_exponential(z, 0.0);
    CHECK(e.values[1] == 0.0);
    CHECK(e.values[2] == 0.0);

    SamplePath z2;
    z2.times = {0.0, 0.5, 1.0};
    z2.values = {0.0, -1.5, -1.5};
    z2.dim = 1;
    z2.jumps.push_back({0.3, Vec{-1.5}});
    const SamplePath e2 = stochastic_exponential(z2, 0.0);
    CHECK(!e2.warnings.empty());
    CHECK(e2.values[1] < 0.0);
}

TEST_CASE("doleans-dade solves its sde under refinement") {
    const auto ref = make_levy_refinable(levy::LevyModel::brownian(), 1.0, 12, 29);
    auto residual = [&](int level) {
        const SamplePath z = ref->at_level(level);
        const SamplePath e = stochastic_exponential(z, 1.0);
        double x = 1.0, worst = 0.0;
        for (std::size_t i = 1; i < z.size(); ++i) {
            x += x * (z.values[i] - z.values[i - 1]);  // Euler for dX = X dZ
            worst = std::max(worst, std::abs(x - e.values[i]));
        }
        return worst;
    };
    const double r8 = residual(8);
    const double r12 = residual(12);
    INFO("r8=", r8, " r12=", r12);
    CHECK(r12 < r8);
}

TEST_CASE("time change: identity, scaling, and variation bound") {
    const SamplePath w = simulate_levy(levy::LevyModel::brownian(), GridSpec{2.0, 12}, 31);

    const SamplePath same = time_change(w, w.times, [](double t) { return t; });
    CHECK(same.values == w.values);

    // clock(t) = 2t over [0, 1]: quadratic variation doubles.
    const auto half = GridSpec{1.0, 11}.times();
    const SamplePath y = time_change(w, half, [](double t) { return 2.0 * t; });
    double q = 0.0;
    for (std::size_t i = 1; i < y.size(); ++i) {
        const double d = y.values[i] - y.values[i - 1];
        q += d * d;
    }
    CHECK(q == doctest::Approx(2.0).epsilon(0.15));

    // Reparametrization cannot increase the discrete variation.
    const double vy = pvar::pvar_exact(y.values, 1.5).value;
    const double vx = pvar::pvar_exact(w.values, 1.5).value;
    CHECK(vy <= vx + 1e-12);

    CHECK_THROWS_AS(time_change(w, half, [](double t) { return 3.0 * t; }),
                    std::invalid_argument);
    CHECK_THROWS_AS(time_change(w, half, [](double t) { return t + 0.1; }),
                    std::invalid_argument);
}

TEST_CASE("cantor function exact values") {
    CHECK(cantor_function(1, 3) == 0.5);
    CHECK(cantor_function(1, 1) == 1.0);
    CHECK(cantor_function(0, 1) == 0.0);
    CHECK(cantor_function(1, 4) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(cantor_function(1, 9) == 0.25);
}

TEST_CASE("cantor divergence table matches the frozen oracle") {
    const auto rows = cantor_divergence(16);
    REQUIRE(rows.size() == 16);
    CHECK(rows[0].f_value == doctest::Approx(5.0 / 12.0).epsilon(1e-15));
    CHECK(rows[0].quotient == doctest::Approx(1.21414369068).epsilon(1e-9));
    CHECK(rows[4].quotient == doctest::Approx(4.29665108274).epsilon(1e-9));
    CHECK(rows[9].quotient == doctest::Approx(29.3325183249).epsilon(1e-9));
    // Successive ratios drift up toward 3/2.
    const double r_last = rows[15].quotient / rows[14].quotient;
    CHECK(r_last == doctest::Approx(1.49886077252).epsilon(1e-9));
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        const double r0 = rows[i].quotient / rows[i - 1].quotient;
        const double r1 = rows[i + 1].quotient / rows[i].quotient;
        CHECK(r1 > r0);
        CHECK(r1 < 1.5);
    }
    CHECK_THROWS_AS(cantor_divergence(31), std::invalid_argument);
}
