#include <doctest.h>

#include <cmath>
#include <vector>

#include "levyvar/core/stats.hpp"

using namespace levyvar;

TEST_CASE("mean, variance, median basics") {
    const std::vector<double> xs{1, 2, 3, 4};
    CHECK(mean(xs) == doctest::Approx(2.5));
    CHECK(sample_variance(xs) == doctest::Approx(5.0 / 3.0));
    CHECK(median(std::vector<double>{3, 1, 2}) == doctest::Approx(2.0));
    CHECK(median(std::vector<double>{4, 1, 2, 3}) == doctest::Approx(2.5));
}

TEST_CASE("line fit recovers an exact affine law") {
    std::vector<double> x, y;
    for (int i = 0; i < 10; ++i) {
        x.push_back(i);
        y.push_back(3.0 * i - 2.0);
    }
    const LineFit f = fit_line(x, y);
    CHECK(f.slope == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(f.intercept == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(f.rms_residual < 1e-10);
}

TEST_CASE("online stats merge equals bulk accumulation") {
    OnlineStats all, left, right;
    for (int i = 0; i < 100; ++i) {
        const double v = std::sin(i * 0.7) * i;
        all.add(v);
        (i < 50 ? left : right).add(v);
    }
    OnlineStats merged = left;
    merged.merge(right);
    CHECK(merged.count() == all.count());
    CHECK(merged.sum() == doctest::Approx(all.sum()).epsilon(1e-15));
    CHECK(merged.variance() == doctest::Approx(all.variance()).epsilon(1e-12));
}
