#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "levyvar/core/grid.hpp"
#include "levyvar/levy/model.hpp"
#include "levyvar/paths/sde.hpp"
#include "levyvar/paths/stable_like.hpp"

namespace levyvar::symbols {

using levy::Complex;

// State-dependent characteristics: a field x -> pointwise Levy model whose drift,
// Gaussian matrix and jump components play the role of (l(x), Q(x), N(x, dy)).
// Pointwise validity is enforced by the LevyModel constructor at every probe.
class StateTriplet {
public:
    using Field = std::function<levy::LevyModel(std::span<const double>)>;

    StateTriplet(std::size_t dim, Field field, std::string label);

    // x-independent characteristics of a fixed model.
    static StateTriplet from_model(levy::LevyModel model);
    // Jump density of index 2a(x): pointwise symmetric stable with unit scale.
    static StateTriplet stable_like(paths::StableLikeField field);

    levy::LevyModel at(std::span<const double> x) const;
    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }
    // Non-null when the characteristics do not depend on x.
    std::shared_ptr<const levy::LevyModel> constant_model() const { return constant_; }

private:
    std::size_t dim_ = 1;
    Field field_;
    std::string label_;
    std::shared_ptr<const levy::LevyModel> constant_;
};

// A symbol q(x, xi) with its construction provenance. All built-in constructions
// satisfy q(x, 0) = 0 and Re q(x, xi) >= 0.
class StateSymbol {
public:
    enum class Kind { from_triplet, from_sde, closed_form };
    using EvalFn = std::function<Complex(std::span<const double> x, std::span<const double> xi)>;

    static StateSymbol from_triplet(StateTriplet triplet);
    // q(x, xi) = psi(Phi(x)' xi) for the driver exponent psi.
    static StateSymbol from_sde(levy::LevyModel driver, paths::CoeffField phi);
    static StateSymbol closed_form(std::size_t dim, EvalFn eval, std::string label);

    Complex operator()(std::span<const double> x, std::span<const double> xi) const;

    std::size_t dim() const { return dim_; }
    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    const std::optional<StateTriplet>& triplet() const { return triplet_; }

    // Optional compact box for global sups; evaluation outside is legal but flagged
    // in the maximal-functional diagnostics.
    std::optional<Box> domain_hint;

private:
    StateSymbol() = default;
    std::size_t dim_ = 1;
    Kind kind_ = Kind::closed_form;
    EvalFn eval_;
    std::string label_;
    std::optional<StateTriplet> triplet_;
};

// Free-function form; validates finiteness and dimensions.
Complex eval_symbol(const StateSymbol& sym, std::span<const double> x, std::span<const double> xi);
StateSymbol sde_symbol(const levy::LevyModel& driver, const paths::CoeffField& phi);

// Named constructions used across tests and the experiment registry.
StateSymbol gbm_symbol();                            // (x xi)^2 / 2
StateSymbol poisson_bm_symbol(double rate);          // xi1^2/2 + rate (1 - e^{i x2 xi2})
StateSymbol stable_like_symbol(paths::StableLikeField field);  // |xi|^{2a(x)}
StateSymbol levy_symbol(levy::LevyModel model);      // constant symbol psi(xi)

}  // namespace levyvar::symbols
