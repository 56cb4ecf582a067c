#include "levyvar/core/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace levyvar {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& s : s_) s = splitmix64(sm);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform01() {
    // 53 random bits in (0,1); add half an ulp so 0 is excluded
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

double Rng::exponential(double rate) {
    if (rate <= 0.0) throw std::invalid_argument("exponential rate must be positive");
    return -std::log(uniform01()) / rate;
}

std::uint64_t Rng::poisson(double mean) {
    if (mean < 0.0) throw std::invalid_argument("poisson mean must be nonnegative");
    if (mean == 0.0) return 0;
    // exponential spacings; fine for the moderate means used here
    std::uint64_t n = 0;
    double acc = exponential(1.0);
    while (acc < mean) {
        ++n;
        acc += exponential(1.0);
    }
    return n;
}

double Rng::gamma_draw(double shape, double rate) {
    if (shape <= 0.0 || rate <= 0.0) throw std::invalid_argument("gamma parameters must be positive");
    // Marsaglia-Tsang, with the usual boost for shape < 1
    double boost = 1.0;
    double k = shape;
    if (k < 1.0) {
        boost = std::pow(uniform01(), 1.0 / k);
        k += 1.0;
    }
    const double d = k - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = gaussian();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        if (u < 1.0 - 0.0331 * x * x * x * x) return boost * d * v / rate;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return boost * d * v / rate;
    }
}

double Rng::sym_stable(double alpha) {
    if (alpha <= 0.0 || alpha > 2.0) throw std::invalid_argument("stable alpha must be in (0,2]");
    const double theta = std::numbers::pi * (uniform01() - 0.5);
    const double w = exponential(1.0);
    if (alpha == 2.0) return 2.0 * std::sqrt(w) * std::sin(theta);  // N(0,2) marginal
    const double a_theta = alpha * theta;
    const double t1 = std::sin(a_theta) / std::pow(std::cos(theta), 1.0 / alpha);
    const double t2 = std::pow(std::cos(theta - a_theta) / w, (1.0 - alpha) / alpha);
    return t1 * t2;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = master ^ 0x6a09e667f3bcc909ULL;
    for (unsigned char c : tag) {
        h ^= c;
        (void)splitmix64(h);
    }
    h ^= index;
    std::uint64_t state = h;
    return splitmix64(state);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t h = master ^ (0x9e3779b97f4a7c15ULL + index);
    std::uint64_t state = h;
    return splitmix64(state);
}

}  // namespace levyvar
