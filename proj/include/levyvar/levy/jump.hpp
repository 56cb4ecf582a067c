#pragma once

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include "levyvar/core/linalg.hpp"
#include "levyvar/core/rng.hpp"

namespace levyvar::levy {

using Complex = std::complex<double>;

// Scalar jump-size distributions for compound Poisson components.
struct ConstantJump {
    double value = 1.0;
};
struct NormalJump {
    double mean = 0.0;
    double sd = 1.0;
};
struct ExponentialJump {
    double rate = 1.0;  // support (0, inf)
};
struct UniformJump {
    double lo = -1.0;
    double hi = 1.0;
};

class JumpDist {
public:
    using Spec = std::variant<ConstantJump, NormalJump, ExponentialJump, UniformJump>;

    JumpDist(Spec spec);  // validates parameters

    Complex cf(double u) const;                 // E exp(i u J)
    double sample(Rng& rng) const;
    double mean_in_unit_ball() const;           // E[J 1_{|J| <= 1}]
    double mean_one_minus_exp_pow(double lam) const;  // E[1 - exp(-|J|^lam)]
    bool symmetric() const;                     // law of J equals law of -J
    const Spec& spec() const { return spec_; }

private:
    Spec spec_;
};

// Independent jump components of a model; each contributes additively to the Levy measure.
// Scalar components act on one coordinate (`axis`) of the state.
struct CompoundPoisson {
    double rate = 1.0;
    JumpDist dist;
    std::size_t axis = 0;
};

// Jump part with characteristic exponent scale * |u|^alpha on its axis.
struct SymmetricStable {
    double alpha = 1.0;  // in (0, 2)
    double scale = 1.0;
    std::size_t axis = 0;
};

// Increasing pure-jump part with exponent shape * log(1 - i u / rate) on its axis.
struct GammaSubordinator {
    double shape = 1.0;
    double rate = 1.0;
    std::size_t axis = 0;
};

struct Atom {
    Vec jump;
    double rate = 1.0;
};
struct FiniteAtomic {
    std::vector<Atom> atoms;
};

using JumpComponent = std::variant<CompoundPoisson, SymmetricStable, GammaSubordinator, FiniteAtomic>;

// Characteristic exponent of the component alone, in the driftless convention of the
// associated canonical process (jump sum, stable part, subordinator). psi(0) = 0.
Complex component_exponent(const JumpComponent& c, std::span<const double> xi);

// integral of y * 1_{|y| <= 1} against the component's Levy measure; the correction between
// the driftless convention above and the truncated-compensator triplet form.
Vec component_unit_ball_mean(const JumpComponent& c, std::size_t dim);

// True when flipping the sign of sampled increments preserves the component's law.
bool component_symmetric(const JumpComponent& c);

void validate_component(const JumpComponent& c, std::size_t dim);

}  // namespace levyvar::levy
