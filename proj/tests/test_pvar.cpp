#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "levyvar/core/rng.hpp"
#include "levyvar/pvar/pvar.hpp"

using namespace levyvar;
using namespace levyvar::pvar;

namespace {

double partition_sum(const SeqView& seq, const PVarResult& r) {
    double s = 0.0;
    for (std::size_t k = 1; k < r.partition.size(); ++k) {
        const auto a = seq.point(r.partition[k - 1]);
        const auto b = seq.point(r.partition[k]);
        double nn = 0.0;
        for (std::size_t j = 0; j < seq.dim; ++j) nn += (b[j] - a[j]) * (b[j] - a[j]);
        s += std::pow(std::sqrt(nn), r.p);
    }
    return s;
}

std::vector<double> random_walk(Rng& rng, std::size_t n, std::size_t dim) {
    std::vector<double> v(n * dim, 0.0);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            v[i * dim + k] = v[(i - 1) * dim + k] + rng.uniform(-1.0, 1.0);
    return v;
}

}  // namespace

TEST_CASE("monotone run collapses to a single increment for p > 1") {
    const std::vector<double> v{0, 1, 2};
    const PVarResult r = pvar_exact(v, 2.0);
    CHECK(r.value == doctest::Approx(4.0).epsilon(1e-14));
    REQUIRE(r.partition.size() == 2);
    CHECK(r.partition.front() == 0);
    CHECK(r.partition.back() == 2);
}

TEST_CASE("full partition is optimal for p <= 1") {
    const std::vector<double> v{0, 1, 0};
    const PVarResult r = pvar_exact(v, 0.5);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.partition.size() == 3);
    CHECK(r.method == "full");
}

TEST_CASE("two-point and zigzag basics") {
    CHECK(pvar_bruteforce(std::vector<double>{0, 1}, 1.7).value == doctest::Approx(1.0));
    CHECK(pvar_exact(std::vector<double>{0, 1, 0, 1}, 1.0).value == doctest::Approx(3.0));
    CHECK(pvar_bruteforce(std::vector<double>{0, 1, 0, 1}, 1.0).value == doctest::Approx(3.0));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(pvar_exact(std::vector<double>{0, 1}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(pvar_exact(std::vector<double>{0, 1}, -1.0), std::invalid_argument);
    CHECK(pvar_exact(std::vector<double>{5.0}, 2.0).value == 0.0);
    std::vector<double> big(21, 0.0);
    CHECK_THROWS_AS(pvar_bruteforce(big, 2.0), std::invalid_argument);
}

TEST_CASE("exact DP equals brute force on 500 random sequences") {
    Rng rng(12345);
    const double ps[] = {0.5, 1.0, 1.5, 2.0, 3.0};
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t dim = (trial % 2) + 1;
        const std::size_t n = 2 + (rng.next_u64() % 11);  // up to 12 points
        const std::vector<double> v = random_walk(rng, n, dim);
        const SeqView seq{v, dim};
        const double p = ps[trial % 5];
        const PVarResult a = pvar_exact(seq, p);
        const PVarResult b = pvar_bruteforce(seq, p);
        INFO("trial=", trial, " n=", n, " dim=", dim, " p=", p);
        REQUIRE(a.value == doctest::Approx(b.value).epsilon(1e-12));
        // Result invariant: reported value equals the reported partition's sum.
        CHECK(partition_sum(seq, a) == doctest::Approx(a.value).epsilon(1e-12));
        CHECK(partition_sum(seq, b) == doctest::Approx(b.value).epsilon(1e-12));
        ++checked;
    }
    CHECK(checked == 500);
}

TEST_CASE("coarsening a sequence never increases the value") {
    Rng rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<double> v = random_walk(rng, 24, 1);
        std::vector<double> coarse;
        for (std::size_t i = 0; i < v.size(); i += 2) coarse.push_back(v[i]);
        for (const double p : {0.7, 1.3, 2.0}) {
            CHECK(pvar_exact(coarse, p).value <= pvar_exact(v, p).value + 1e-12);
        }
    }
}

TEST_CASE("p to value^(1/p) is nonincreasing in p") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::vector<double> v = random_walk(rng, 40, 1);
        double prev = INFINITY;
        for (const double p : {0.5, 1.0, 1.5, 2.0, 3.0}) {
            const double cur = std::pow(pvar_exact(v, p).value, 1.0 / p);
            CHECK(cur <= prev * (1.0 + 1e-12));
            prev = cur;
        }
    }
}

TEST_CASE("components: scalar case and constant padding change nothing") {
    Rng rng(91);
    const std::vector<double> w = random_walk(rng, 30, 1);
    const PVarComponents one = pvar_components(SeqView{w, 1}, 1.5);
    CHECK(one.per_coord.size() == 1);
    CHECK(one.total.value == doctest::Approx(one.per_coord[0].value).epsilon(1e-14));

    std::vector<double> padded(w.size() * 2, 0.0);
    for (std::size_t i = 0; i < w.size(); ++i) padded[2 * i] = w[i];
    const PVarComponents two = pvar_components(SeqView{padded, 2}, 1.5);
    CHECK(two.total.value == doctest::Approx(one.total.value).epsilon(1e-12));
}

TEST_CASE("components: norm-equivalence sandwich on random 2-d walks") {
    Rng rng(47);
    const double p = 1.5;
    for (int trial = 0; trial < 200; ++trial) {
        const std::vector<double> v = random_walk(rng, 16, 2);
        const SeqView seq{v, 2};
        const PVarComponents c = pvar_components(seq, p);
        double max_coord = 0.0;
        for (const auto& pc : c.per_coord) max_coord = std::max(max_coord, pc.value);
        const double lo = std::pow(1.0 / std::sqrt(2.0), p) * max_coord;
        const double hi = std::max(2.0, std::pow(2.0, p)) * max_coord;
        CHECK(c.total.value >= lo - 1e-12);
        CHECK(c.total.value <= hi + 1e-12);
        CHECK(c.lower_bound <= c.total.value + 1e-12);
        CHECK(c.total.value <= c.upper_bound + 1e-12);
    }
}

TEST_CASE("dense and scalar DP agree on larger sequences") {
    Rng rng(63);
    for (int trial = 0; trial < 10; ++trial) {
        const std::vector<double> v = random_walk(rng, 300, 1);
        // Present the same scalar data as a 2-d sequence with a zero coordinate to
        // route through the dense DP.
        std::vector<double> v2(v.size() * 2, 0.0);
        for (std::size_t i = 0; i < v.size(); ++i) v2[2 * i] = v[i];
        for (const double p : {1.5, 2.5}) {
            const double a = pvar_exact(v, p).value;
            const double b = pvar_exact(SeqView{v2, 2}, p).value;
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
        }
    }
}
