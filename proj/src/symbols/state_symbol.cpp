#include "levyvar/symbols/state_symbol.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace levyvar::symbols {

namespace {

void require_finite(std::span<const double> v, const char* what) {
    for (const double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

StateTriplet::StateTriplet(std::size_t dim, Field field, std::string label)
    : dim_(dim), field_(std::move(field)), label_(std::move(label)) {
    if (dim_ < 1) throw std::invalid_argument("state dimension must be positive");
    if (!field_) throw std::invalid_argument("state triplet needs a field");
}

StateTriplet StateTriplet::from_model(levy::LevyModel model) {
    auto shared = std::make_shared<const levy::LevyModel>(std::move(model));
    StateTriplet t(shared->dim(), [shared](std::span<const double>) { return *shared; },
                   shared->label());
    t.constant_ = shared;
    return t;
}

StateTriplet StateTriplet::stable_like(paths::StableLikeField field) {
    const std::string label = "stable-like[" + field.label + "]";
    return StateTriplet(
        1,
        [f = std::move(field)](std::span<const double> x) {
            return levy::LevyModel::symmetric_stable(2.0 * f.at(x[0]));
        },
        label);
}

levy::LevyModel StateTriplet::at(std::span<const double> x) const {
    if (x.size() != dim_) throw std::invalid_argument("state dimension mismatch");
    require_finite(x, "state");
    levy::LevyModel m = field_(x);
    if (m.dim() != dim_) throw std::invalid_argument("field returned a model of wrong dimension");
    return m;
}

StateSymbol StateSymbol::from_triplet(StateTriplet triplet) {
    StateSymbol s;
    s.dim_ = triplet.dim();
    s.kind_ = Kind::from_triplet;
    s.label_ = triplet.label();
    if (auto shared = triplet.constant_model()) {
        s.eval_ = [shared](std::span<const double>, std::span<const double> xi) {
            return shared->char_exponent(xi);
        };
    } else {
        s.eval_ = [t = triplet](std::span<const double> x, std::span<const double> xi) {
            return t.at(x).char_exponent(xi);
        };
    }
    s.triplet_ = std::move(triplet);
    return s;
}

StateSymbol StateSymbol::from_sde(levy::LevyModel driver, paths::CoeffField phi) {
    if (phi.driver_dim != driver.dim())
        throw std::invalid_argument("coefficient field does not match the driver dimension");
    StateSymbol s;
    s.dim_ = phi.state_dim;
    s.kind_ = Kind::from_sde;
    s.label_ = "sde[" + phi.label + "," + driver.label() + "]";
    s.eval_ = [d = std::move(driver), f = std::move(phi)](std::span<const double> x,
                                                          std::span<const double> xi) {
        const Mat m = f.at(x);
        Vec eta(f.driver_dim, 0.0);
        for (std::size_t j = 0; j < f.driver_dim; ++j)
            for (std::size_t i = 0; i < f.state_dim; ++i) eta[j] += m(i, j) * xi[i];
        return d.char_exponent(eta);
    };
    return s;
}

StateSymbol StateSymbol::closed_form(std::size_t dim, EvalFn eval, std::string label) {
    if (dim < 1) throw std::invalid_argument("symbol dimension must be positive");
    if (!eval) throw std::invalid_argument("closed-form symbol needs an evaluator");
    StateSymbol s;
    s.dim_ = dim;
    s.kind_ = Kind::closed_form;
    s.eval_ = std::move(eval);
    s.label_ = std::move(label);
    return s;
}

Complex StateSymbol::operator()(std::span<const double> x, std::span<const double> xi) const {
    return eval_(x, xi);
}

Complex eval_symbol(const StateSymbol& sym, std::span<const double> x, std::span<const double> xi) {
    if (x.size() != sym.dim() || xi.size() != sym.dim())
        throw std::invalid_argument("symbol evaluation dimension mismatch");
    require_finite(x, "state");
    require_finite(xi, "frequency");
    return sym(x, xi);
}

StateSymbol sde_symbol(const levy::LevyModel& driver, const paths::CoeffField& phi) {
    return StateSymbol::from_sde(driver, phi);
}

StateSymbol gbm_symbol() {
    return StateSymbol::from_sde(levy::LevyModel::brownian(), paths::CoeffField::linear_1d());
}

StateSymbol poisson_bm_symbol(double rate) {
    if (!(rate >= 0.0)) throw std::invalid_argument("jump rate must be nonnegative");
    return StateSymbol::closed_form(
        2,
        [rate](std::span<const double> x, std::span<const double> xi) {
            const Complex osc = 1.0 - std::exp(Complex(0.0, x[1] * xi[1]));
            return Complex(0.5 * xi[0] * xi[0], 0.0) + rate * osc;
        },
        "poisson-bm");
}

StateSymbol stable_like_symbol(paths::StableLikeField field) {
    const std::string label = "stable-like[" + field.label + "]";
    return StateSymbol::closed_form(
        1,
        [f = std::move(field)](std::span<const double> x, std::span<const double> xi) {
            const double r = std::abs(xi[0]);
            return Complex(r == 0.0 ? 0.0 : std::pow(r, 2.0 * f.at(x[0])), 0.0);
        },
        label);
}

StateSymbol levy_symbol(levy::LevyModel model) {
    return StateSymbol::from_triplet(StateTriplet::from_model(std::move(model)));
}

}  // namespace levyvar::symbols
