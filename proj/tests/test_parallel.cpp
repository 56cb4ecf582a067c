#include <doctest.h>

#include <stdexcept>

#include "levyvar/core/parallel.hpp"
#include "levyvar/core/rng.hpp"
#include "levyvar/core/stats.hpp"

using namespace levyvar;

namespace {

OnlineStats run_reduction(int workers) {
    return chunked_reduce<OnlineStats>(
        20000, workers, [] { return OnlineStats{}; },
        [](OnlineStats& acc, std::uint64_t r) {
            Rng rng(derive_seed(99, "parallel-test", r));
            acc.add(rng.gaussian());
        },
        [](OnlineStats& into, const OnlineStats& from) { into.merge(from); }, 512);
}

}  // namespace

TEST_CASE("chunked reduce is bit-identical across worker counts") {
    const OnlineStats s1 = run_reduction(1);
    const OnlineStats s4 = run_reduction(4);
    const OnlineStats s7 = run_reduction(7);
    CHECK(s1.count() == s4.count());
    CHECK(s1.sum() == s4.sum());        // exact equality, not approx
    CHECK(s1.sum_sq() == s4.sum_sq());
    CHECK(s1.sum() == s7.sum());
    CHECK(s1.sum_sq() == s7.sum_sq());
}

TEST_CASE("chunked reduce propagates body exceptions") {
    auto bad = [] {
        return chunked_reduce<int>(
            1000, 4, [] { return 0; },
            [](int&, std::uint64_t r) {
                if (r == 777) throw std::runtime_error("boom");
            },
            [](int&, const int&) {}, 64);
    };
    CHECK_THROWS_AS(bad(), std::runtime_error);
}
