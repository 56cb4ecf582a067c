#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace levyvar {

// xoshiro256++ with splitmix64 seeding. All samplers below are implemented by hand so
// results are reproducible bit for bit across standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    double uniform01();                         // (0,1), 53-bit mantissa, never 0
    double uniform(double a, double b);
    double gaussian();                          // Box-Muller pair, one value cached
    double exponential(double rate = 1.0);
    std::uint64_t poisson(double mean);         // exponential-spacing count
    double gamma_draw(double shape, double rate);
    // Standard symmetric alpha-stable draw with characteristic function exp(-|u|^alpha),
    // Chambers-Mallows-Stuck representation. alpha in (0,2].
    double sym_stable(double alpha);

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Deterministic seed derivation for (master seed, experiment id, replica index) style
// hierarchies. Order-sensitive; mixes each part with splitmix64 steps.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index = 0);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace levyvar
