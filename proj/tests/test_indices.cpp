#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "levyvar/symbols/indices.hpp"

using namespace levyvar;
using namespace levyvar::symbols;

namespace {

const GridCfg kCfg{16, 8, 33};

std::vector<std::pair<double, double>> power_samples(double exponent, int k_lo, int k_hi) {
    std::vector<std::pair<double, double>> out;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double s = std::ldexp(1.0, -k);
        out.emplace_back(s, std::pow(s, -exponent));
    }
    return out;
}

}  // namespace

TEST_CASE("growth index extraction") {
    const auto exact = index_from_growth(power_samples(1.2, 4, 16), GrowthMode::at_zero);
    CHECK(exact.value == doctest::Approx(1.2).epsilon(1e-9));
    CHECK(exact.rms_residual <= 1e-9);
    CHECK_FALSE(exact.unbounded);

    auto flat = power_samples(0.0, 4, 10);
    CHECK(index_from_growth(flat, GrowthMode::at_zero).value == doctest::Approx(0.0));

    // Logarithmic correction: the tail-half slope lands just above the true exponent.
    std::vector<std::pair<double, double>> logc;
    for (int k = 6; k <= 16; ++k) {
        const double s = std::ldexp(1.0, -k);
        logc.emplace_back(s, std::pow(s, -2.0) * std::log(1.0 / s));
    }
    CHECK(index_from_growth(logc, GrowthMode::at_zero).value ==
          doctest::Approx(2.1078726113).epsilon(1e-9));

    // Negative growth clamps to zero.
    const auto shrink = index_from_growth(power_samples(-0.7, 4, 10), GrowthMode::at_zero);
    CHECK(shrink.value == 0.0);
    CHECK(shrink.slope == doctest::Approx(-0.7).epsilon(1e-9));

    // At-infinity mode reads the slope from the large-scale tail.
    std::vector<std::pair<double, double>> grow;
    for (int k = 4; k <= 12; ++k) {
        const double r = std::ldexp(1.0, k);
        grow.emplace_back(r, std::pow(r, 0.9));
    }
    CHECK(index_from_growth(grow, GrowthMode::at_infinity).value ==
          doctest::Approx(0.9).epsilon(1e-9));

    std::vector<std::pair<double, double>> with_inf = power_samples(1.0, 4, 10);
    with_inf[2].second = std::numeric_limits<double>::infinity();
    const auto ub = index_from_growth(with_inf, GrowthMode::at_zero);
    CHECK(ub.unbounded);
    CHECK(std::isinf(ub.value));

    std::vector<std::pair<double, double>> zeros(5, {0.5, 0.0});
    for (std::size_t i = 0; i < zeros.size(); ++i) zeros[i].first = std::ldexp(1.0, -int(i) - 1);
    CHECK(index_from_growth(zeros, GrowthMode::at_zero).value == 0.0);

    std::vector<std::pair<double, double>> few = {{0.5, 1.0}, {0.25, 2.0}, {0.125, 4.0}};
    CHECK_THROWS_AS(index_from_growth(few, GrowthMode::at_zero), std::invalid_argument);
}

TEST_CASE("spot index") {
    const StateSymbol gbm = gbm_symbol();
    CHECK(index_spot(gbm, Vec{1.0}, kCfg).value == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(index_spot(gbm, Vec{0.0}, kCfg).value == 0.0);

    const StateSymbol sl = stable_like_symbol(paths::StableLikeField::constant_index(0.45));
    CHECK(index_spot(sl, Vec{3.0}, kCfg).value == doctest::Approx(0.9).epsilon(1e-6));

    const StateSymbol stable = levy_symbol(levy::LevyModel::symmetric_stable(1.2));
    CHECK(index_spot(stable, Vec{0.0}, kCfg).value == doctest::Approx(1.2).epsilon(1e-6));
}

TEST_CASE("local index via shrinking balls") {
    const StateSymbol gbm = gbm_symbol();
    const auto at_one = index_beta_loc(gbm, Vec{1.0}, kCfg);
    CHECK(at_one.value == doctest::Approx(2.0).epsilon(1e-6));
    for (std::size_t j = 1; j < at_one.trace.size(); ++j)
        CHECK(at_one.trace[j] >= at_one.trace[j - 1] - 0.02);
    CHECK(at_one.trace.front() == doctest::Approx(0.0));  // the ball of radius 1 reaches x = 0

    CHECK(index_beta_loc(gbm, Vec{0.0}, kCfg).value == doctest::Approx(0.0));

    const StateSymbol sl = stable_like_symbol(paths::StableLikeField::sin_modulated(0.3, 0.2));
    CHECK(index_beta_loc(sl, Vec{0.0}, kCfg).value == doctest::Approx(0.6).epsilon(1e-6));

    const StateSymbol stable = levy_symbol(levy::LevyModel::symmetric_stable(1.2));
    CHECK(index_beta_loc(stable, Vec{0.5}, kCfg).value == doctest::Approx(1.2).epsilon(1e-6));
}

TEST_CASE("uniform index at infinity") {
    const Box domain = Box::centered(Vec{0.0}, 3.0);

    const auto stable = index_beta_inf_unif(levy_symbol(levy::LevyModel::symmetric_stable(1.2)),
                                            domain, kCfg);
    CHECK(stable.value == doctest::Approx(1.2).epsilon(0.04));
    CHECK_FALSE(stable.unbounded);

    const auto sl = index_beta_inf_unif(
        stable_like_symbol(paths::StableLikeField::sin_modulated(0.3, 0.2)), domain, kCfg);
    CHECK(std::abs(sl.value - 1.0) <= 0.05);

    const auto gbm = index_beta_inf_unif(gbm_symbol(), Box::centered(Vec{0.0}, 2.0), kCfg);
    CHECK(gbm.unbounded);
    CHECK(std::isinf(gbm.value));
}

TEST_CASE("per-state uniform index stays finite on multiplicative noise") {
    const auto est = index_beta_inf_unif1(gbm_symbol(), Box::centered(Vec{0.0}, 2.0), kCfg);
    CHECK_FALSE(est.unbounded);
    CHECK(std::abs(est.value - 2.0) <= 0.05);
}

TEST_CASE("index sandwich on a state-dependent model") {
    const StateSymbol sl = stable_like_symbol(paths::StableLikeField::sin_modulated(0.3, 0.2));
    const Box domain = Box::centered(Vec{0.0}, 3.0);
    const double loc = index_beta_loc(sl, Vec{0.0}, kCfg).value;
    const double unif1 = index_beta_inf_unif1(sl, domain, kCfg).value;
    const double unif = index_beta_inf_unif(sl, domain, kCfg).value;
    CHECK(loc <= unif1 + 0.05);
    CHECK(unif1 <= unif + 0.05);
    CHECK(loc == doctest::Approx(0.6).epsilon(0.05));
    CHECK(unif == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("constant-coefficient indices reduce to the classical ones") {
    // Drifted stable: |psi| grows linearly (beta1 = 1), Re psi like |xi|^0.7 (beta2 = 0.7).
    const auto model = levy::LevyModel::symmetric_stable(0.7).with_drift(Vec{1.0});
    const StateSymbol sym = levy_symbol(model);
    const Box domain = Box::centered(Vec{0.0}, 2.0);
    const auto classical = levy::classical_indices(model, false);
    CHECK(std::abs(index_beta_inf_unif(sym, domain, kCfg).value - classical.beta1) <= 0.05);
    CHECK(std::abs(index_beta_loc(sym, Vec{0.0}, kCfg).value - classical.beta2) <= 0.05);
}

TEST_CASE("index csv row") {
    IndexEstimate e;
    e.value = 1.25;
    e.slope = 1.25;
    const std::string row = index_csv_row("stable", "beta-unif", e);
    CHECK(row.find("stable") == 0);
    CHECK(row.find("beta-unif") != std::string::npos);
    CHECK(row.ends_with(",0\n"));
    CHECK(std::count(row.begin(), row.end(), ',') == 5);
}
