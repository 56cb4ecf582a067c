#include "levyvar/symbols/d_integral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "levyvar/core/quadrature.hpp"

namespace levyvar::symbols {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Normalization of the one-sided density c |y|^{-1-alpha} reproducing the exponent
// scale * |u|^alpha: integral of (1 - cos u) u^{-1-alpha} over (0, inf).
double stable_cos_integral(double alpha) {
    if (alpha == 1.0) return std::numbers::pi / 2.0;
    return std::tgamma(2.0 - alpha) * std::cos(std::numbers::pi * alpha / 2.0) /
           (alpha * (1.0 - alpha));
}

// One-sided integral of (1 - e^{-y^lambda}) y^{-1-alpha} dy over (0, inf), lambda > alpha.
double stable_one_sided(double alpha, double lambda) {
    double total = 0.0;
    // Inner shells (2^{-k-1}, 2^-k] down to 2^-41.
    for (int k = 0; k <= 40; ++k) {
        const double hi = std::ldexp(1.0, -k);
        total += adaptive_simpson(
            [&](double y) { return -std::expm1(-std::pow(y, lambda)) * std::pow(y, -1.0 - alpha); },
            0.5 * hi, hi, 1e-13);
    }
    // Below 2^-41: 1 - e^{-u} = u - u^2/2 + O(u^3) termwise.
    const double eps = std::ldexp(1.0, -41);
    total += std::pow(eps, lambda - alpha) / (lambda - alpha) -
             0.5 * std::pow(eps, 2.0 * lambda - alpha) / (2.0 * lambda - alpha);
    // Tail beyond 1: split off the exactly integrable y^{-1-alpha} part.
    const double ystar = std::min(2100.0, std::pow(45.0, 1.0 / lambda));
    total += 1.0 / alpha;
    if (ystar > 1.0)
        total -= adaptive_simpson(
            [&](double y) { return std::exp(-std::pow(y, lambda)) * std::pow(y, -1.0 - alpha); },
            1.0, ystar, 1e-13);
    return total;
}

// Lower-bound accumulation showing divergence for lambda <= alpha: on each shell,
// (1 - e^{-y^lambda}) >= (1 - e^{-y_lo^lambda}) and the power mass is explicit.
bool stable_exceeds_cap(double alpha, double lambda, double c, double cap) {
    double acc = 0.0;
    const double shell_pow = (std::pow(2.0, alpha) - 1.0) / alpha;
    for (int k = 0; k <= 200; ++k) {
        const double u = std::pow(std::ldexp(1.0, -(k + 1)), lambda);
        acc += 2.0 * c * -std::expm1(-u) * shell_pow * std::pow(2.0, alpha * k);
        if (acc >= cap) return true;
    }
    // Deep shells: 1 - e^{-u} ~ u, so the terms follow a geometric recurrence.
    const double g = std::pow(2.0, alpha - lambda);  // >= 1 here
    double term = 2.0 * c * std::pow(std::ldexp(1.0, -202), lambda) * shell_pow *
                  std::pow(2.0, alpha * 201.0);
    for (long long k = 0; k < 200'000'000LL; ++k) {
        acc += term;
        term *= g;
        if (acc >= cap) return true;
    }
    return true;  // terms are bounded below by a positive constant, so this is unreachable
}

double gamma_sub_integral(double shape, double rate, double lambda) {
    // Substituting u = y^lambda gives (1/lambda) int (1-e^{-u})/u * e^{-rate u^{1/lambda}} du,
    // whose integrand is bounded and smooth at zero.
    const double ustar = std::pow(45.0 / rate, lambda);
    const double val = adaptive_simpson(
        [&](double u) {
            const double base = u < 1e-12 ? 1.0 - 0.5 * u : -std::expm1(-u) / u;
            return base * std::exp(-rate * std::pow(u, 1.0 / lambda));
        },
        0.0, ustar, 1e-12);
    return shape * val / lambda;
}

}  // namespace

DIntegralResult d_integral(const StateTriplet& triplet, std::span<const double> x, double lambda,
                           double cap) {
    if (!(lambda > 0.0) || lambda > 2.0)
        throw std::invalid_argument("the divergence functional needs lambda in (0, 2]");
    const levy::LevyModel m = triplet.at(x);
    if (lambda < 2.0 && m.has_gaussian_part())
        throw std::invalid_argument("lambda < 2 requires characteristics without a Gaussian part");

    DIntegralResult out;
    if (lambda == 2.0)
        for (std::size_t i = 0; i < m.dim(); ++i) out.value += m.gaussian()(i, i);

    for (const auto& comp : m.jumps()) {
        if (const auto* cp = std::get_if<levy::CompoundPoisson>(&comp)) {
            out.value += cp->rate * cp->dist.mean_one_minus_exp_pow(lambda);
        } else if (const auto* fa = std::get_if<levy::FiniteAtomic>(&comp)) {
            for (const auto& atom : fa->atoms)
                out.value += atom.rate * -std::expm1(-std::pow(norm2(atom.jump), lambda));
        } else if (const auto* gs = std::get_if<levy::GammaSubordinator>(&comp)) {
            out.value += gamma_sub_integral(gs->shape, gs->rate, lambda);
        } else if (const auto* ss = std::get_if<levy::SymmetricStable>(&comp)) {
            const double c = ss->scale / (2.0 * stable_cos_integral(ss->alpha));
            if (lambda <= ss->alpha) {
                if (stable_exceeds_cap(ss->alpha, lambda, c, cap)) {
                    out.diverges = true;
                    out.value = kInf;
                    return out;
                }
            } else {
                out.value += 2.0 * c * stable_one_sided(ss->alpha, lambda);
            }
        }
    }
    return out;
}

}  // namespace levyvar::symbols
