#include "levyvar/levy/jump.hpp"

#include <cmath>
#include <stdexcept>

#include "levyvar/core/quadrature.hpp"

namespace levyvar::levy {

namespace {

double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::acos(-1.0)); }

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

JumpDist::JumpDist(Spec spec) : spec_(std::move(spec)) {
    if (const auto* n = std::get_if<NormalJump>(&spec_)) {
        if (n->sd <= 0.0) throw std::invalid_argument("normal jump sd must be positive");
    } else if (const auto* e = std::get_if<ExponentialJump>(&spec_)) {
        if (e->rate <= 0.0) throw std::invalid_argument("exponential jump rate must be positive");
    } else if (const auto* u = std::get_if<UniformJump>(&spec_)) {
        if (!(u->lo < u->hi)) throw std::invalid_argument("uniform jump needs lo < hi");
    }
}

Complex JumpDist::cf(double u) const {
    return std::visit(
        [u](const auto& s) -> Complex {
            using T = std::decay_t<decltype(s)>;
            const Complex iu(0.0, u);
            if constexpr (std::is_same_v<T, ConstantJump>) {
                return std::exp(iu * s.value);
            } else if constexpr (std::is_same_v<T, NormalJump>) {
                return std::exp(iu * s.mean - 0.5 * s.sd * s.sd * u * u);
            } else if constexpr (std::is_same_v<T, ExponentialJump>) {
                return s.rate / Complex(s.rate, -u);
            } else {
                if (u == 0.0) return 1.0;
                return (std::exp(iu * s.hi) - std::exp(iu * s.lo)) / (iu * (s.hi - s.lo));
            }
        },
        spec_);
}

double JumpDist::sample(Rng& rng) const {
    return std::visit(
        [&rng](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ConstantJump>) {
                return s.value;
            } else if constexpr (std::is_same_v<T, NormalJump>) {
                return s.mean + s.sd * rng.gaussian();
            } else if constexpr (std::is_same_v<T, ExponentialJump>) {
                return rng.exponential(s.rate);
            } else {
                return rng.uniform(s.lo, s.hi);
            }
        },
        spec_);
}

double JumpDist::mean_in_unit_ball() const {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ConstantJump>) {
                return std::abs(s.value) <= 1.0 ? s.value : 0.0;
            } else if constexpr (std::is_same_v<T, NormalJump>) {
                const double a = (-1.0 - s.mean) / s.sd;
                const double b = (1.0 - s.mean) / s.sd;
                return s.mean * (normal_cdf(b) - normal_cdf(a)) +
                       s.sd * (normal_pdf(a) - normal_pdf(b));
            } else if constexpr (std::is_same_v<T, ExponentialJump>) {
                const double th = s.rate;
                return (1.0 - std::exp(-th) * (1.0 + th)) / th;
            } else {
                const double lo = std::max(s.lo, -1.0), hi = std::min(s.hi, 1.0);
                if (lo >= hi) return 0.0;
                return 0.5 * (hi * hi - lo * lo) / (s.hi - s.lo);
            }
        },
        spec_);
}

double JumpDist::mean_one_minus_exp_pow(double lam) const {
    if (lam <= 0.0) throw std::invalid_argument("exponent lambda must be positive");
    auto g = [lam](double y) { return -std::expm1(-std::pow(std::abs(y), lam)); };
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ConstantJump>) {
                return g(s.value);
            } else if constexpr (std::is_same_v<T, NormalJump>) {
                auto f = [&](double y) {
                    return g(y) * normal_pdf((y - s.mean) / s.sd) / s.sd;
                };
                return adaptive_simpson(f, s.mean - 10.0 * s.sd, s.mean + 10.0 * s.sd, 1e-12);
            } else if constexpr (std::is_same_v<T, ExponentialJump>) {
                auto f = [&](double y) { return g(y) * s.rate * std::exp(-s.rate * y); };
                const double hi = 60.0 / s.rate;
                return adaptive_simpson(f, 0.0, hi, 1e-12);
            } else {
                auto f = [&](double y) { return g(y) / (s.hi - s.lo); };
                return adaptive_simpson(f, s.lo, s.hi, 1e-12);
            }
        },
        spec_);
}

bool JumpDist::symmetric() const {
    return std::visit(
        [](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ConstantJump>) {
                return s.value == 0.0;
            } else if constexpr (std::is_same_v<T, NormalJump>) {
                return s.mean == 0.0;
            } else if constexpr (std::is_same_v<T, ExponentialJump>) {
                return false;
            } else {
                return s.lo == -s.hi;
            }
        },
        spec_);
}

Complex component_exponent(const JumpComponent& c, std::span<const double> xi) {
    return std::visit(
        [&](const auto& s) -> Complex {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CompoundPoisson>) {
                return s.rate * (1.0 - s.dist.cf(xi[s.axis]));
            } else if constexpr (std::is_same_v<T, SymmetricStable>) {
                return s.scale * std::pow(std::abs(xi[s.axis]), s.alpha);
            } else if constexpr (std::is_same_v<T, GammaSubordinator>) {
                return s.shape * std::log(Complex(1.0, -xi[s.axis] / s.rate));
            } else {
                Complex sum = 0.0;
                for (const auto& atom : s.atoms) {
                    const Complex iu(0.0, dot(atom.jump, xi));
                    sum += atom.rate * (1.0 - std::exp(iu));
                }
                return sum;
            }
        },
        c);
}

Vec component_unit_ball_mean(const JumpComponent& c, std::size_t dim) {
    Vec m(dim, 0.0);
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CompoundPoisson>) {
                m[s.axis] = s.rate * s.dist.mean_in_unit_ball();
            } else if constexpr (std::is_same_v<T, SymmetricStable>) {
                // symmetric measure: the truncated mean vanishes
            } else if constexpr (std::is_same_v<T, GammaSubordinator>) {
                // integral of y on (0,1] against shape * y^{-1} exp(-rate y) dy
                m[s.axis] = s.shape * (1.0 - std::exp(-s.rate)) / s.rate;
            } else {
                for (const auto& atom : s.atoms)
                    if (norm2(atom.jump) <= 1.0)
                        for (std::size_t i = 0; i < dim; ++i) m[i] += atom.rate * atom.jump[i];
            }
        },
        c);
    return m;
}

bool component_symmetric(const JumpComponent& c) {
    return std::visit(
        [](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CompoundPoisson>) {
                return s.dist.symmetric();
            } else if constexpr (std::is_same_v<T, SymmetricStable>) {
                return true;
            } else if constexpr (std::is_same_v<T, GammaSubordinator>) {
                return false;
            } else {
                // would need the atom set closed under negation; report asymmetric
                return s.atoms.empty();
            }
        },
        c);
}

void validate_component(const JumpComponent& c, std::size_t dim) {
    std::visit(
        [dim](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CompoundPoisson>) {
                if (s.rate < 0.0) throw std::invalid_argument("compound Poisson rate must be >= 0");
                if (s.axis >= dim) throw std::invalid_argument("jump axis out of range");
            } else if constexpr (std::is_same_v<T, SymmetricStable>) {
                if (s.alpha <= 0.0 || s.alpha >= 2.0)
                    throw std::invalid_argument("stable alpha must be in (0,2)");
                if (s.scale <= 0.0) throw std::invalid_argument("stable scale must be positive");
                if (s.axis >= dim) throw std::invalid_argument("jump axis out of range");
            } else if constexpr (std::is_same_v<T, GammaSubordinator>) {
                if (s.shape <= 0.0 || s.rate <= 0.0)
                    throw std::invalid_argument("gamma subordinator parameters must be positive");
                if (s.axis >= dim) throw std::invalid_argument("jump axis out of range");
            } else {
                for (const auto& atom : s.atoms) {
                    if (atom.jump.size() != dim)
                        throw std::invalid_argument("atomic jump dimension mismatch");
                    if (atom.rate <= 0.0) throw std::invalid_argument("atom rate must be positive");
                    if (norm2(atom.jump) == 0.0)
                        throw std::invalid_argument("atomic jumps must be nonzero");
                }
            }
        },
        c);
}

}  // namespace levyvar::levy
