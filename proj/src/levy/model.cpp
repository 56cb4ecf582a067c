#include "levyvar/levy/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "levyvar/core/grid.hpp"
#include "levyvar/core/stats.hpp"

namespace levyvar::levy {

LevyModel::LevyModel(Vec drift, Mat gaussian, std::vector<JumpComponent> jumps, std::string label)
    : drift_(std::move(drift)),
      gaussian_(std::move(gaussian)),
      jumps_(std::move(jumps)),
      label_(std::move(label)) {
    const std::size_t d = drift_.size();
    if (d == 0) throw std::invalid_argument("model dimension must be positive");
    if (gaussian_.rows() == 0) gaussian_ = Mat(d, d);
    if (gaussian_.rows() != d || gaussian_.cols() != d)
        throw std::invalid_argument("gaussian matrix dimension mismatch");
    chol_ = cholesky_psd(gaussian_);  // validates positive semidefiniteness
    for (const auto& c : jumps_) validate_component(c, d);
}

LevyModel LevyModel::brownian(std::size_t dim, double variance) {
    if (variance < 0.0) throw std::invalid_argument("variance must be nonnegative");
    Vec zero(dim, 0.0);
    Mat q(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) q(i, i) = variance;
    return LevyModel(zero, q, {}, "brownian");
}

LevyModel LevyModel::pure_drift(Vec l) {
    const std::size_t d = l.size();
    return LevyModel(std::move(l), Mat(d, d), {}, "drift");
}

LevyModel LevyModel::symmetric_stable(double alpha, double scale) {
    return LevyModel({0.0}, Mat(1, 1), {SymmetricStable{alpha, scale, 0}}, "symmetric-stable");
}

LevyModel LevyModel::compound_poisson(double rate, JumpDist dist) {
    return LevyModel({0.0}, Mat(1, 1), {CompoundPoisson{rate, std::move(dist), 0}},
                     "compound-poisson");
}

LevyModel LevyModel::gamma_subordinator(double shape, double rate) {
    return LevyModel({0.0}, Mat(1, 1), {GammaSubordinator{shape, rate, 0}}, "gamma-subordinator");
}

LevyModel LevyModel::finite_atomic(std::vector<Atom> atoms) {
    if (atoms.empty()) throw std::invalid_argument("finite atomic part needs at least one atom");
    const std::size_t d = atoms.front().jump.size();
    return LevyModel(Vec(d, 0.0), Mat(d, d), {FiniteAtomic{std::move(atoms)}}, "finite-atomic");
}

LevyModel LevyModel::product(const std::vector<LevyModel>& parts, std::string label) {
    if (parts.empty()) throw std::invalid_argument("product of zero models");
    std::size_t d = 0;
    for (const auto& p : parts) d += p.dim();
    Vec drift(d, 0.0);
    Mat q(d, d);
    std::vector<JumpComponent> jumps;
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.dim(); ++i) {
            drift[off + i] = p.path_drift()[i];
            for (std::size_t j = 0; j < p.dim(); ++j) q(off + i, off + j) = p.gaussian()(i, j);
        }
        for (auto c : p.jumps()) {
            std::visit(
                [&](auto& s) {
                    using T = std::decay_t<decltype(s)>;
                    if constexpr (std::is_same_v<T, FiniteAtomic>) {
                        for (auto& atom : s.atoms) {
                            Vec lifted(d, 0.0);
                            for (std::size_t i = 0; i < atom.jump.size(); ++i)
                                lifted[off + i] = atom.jump[i];
                            atom.jump = std::move(lifted);
                        }
                    } else {
                        s.axis += off;
                    }
                },
                c);
            jumps.push_back(std::move(c));
        }
        off += p.dim();
    }
    return LevyModel(std::move(drift), std::move(q), std::move(jumps), std::move(label));
}

LevyModel LevyModel::with_drift(const Vec& extra) const {
    if (extra.size() != dim()) throw std::invalid_argument("drift dimension mismatch");
    LevyModel m = *this;
    for (std::size_t i = 0; i < extra.size(); ++i) m.drift_[i] += extra[i];
    return m;
}

LevyModel LevyModel::with_label(std::string label) const {
    LevyModel m = *this;
    m.label_ = std::move(label);
    return m;
}

bool LevyModel::has_gaussian_part() const {
    for (double v : gaussian_.data())
        if (v != 0.0) return true;
    return false;
}

bool LevyModel::mirrorable() const {
    for (double v : drift_)
        if (v != 0.0) return false;
    return std::all_of(jumps_.begin(), jumps_.end(), component_symmetric);
}

bool LevyModel::jumps_enumerable() const {
    for (const auto& c : jumps_)
        if (!std::holds_alternative<CompoundPoisson>(c) && !std::holds_alternative<FiniteAtomic>(c))
            return false;
    return true;
}

Complex LevyModel::char_exponent(std::span<const double> xi) const {
    if (xi.size() != dim()) throw std::invalid_argument("frequency dimension mismatch");
    Complex psi(0.5 * gaussian_.quad(xi), -dot(drift_, xi));
    for (const auto& c : jumps_) psi += component_exponent(c, xi);
    return psi;
}

LevyTriplet LevyModel::triplet() const {
    LevyTriplet t{drift_, gaussian_, jumps_};
    for (const auto& c : jumps_) {
        const Vec corr = component_unit_ball_mean(c, dim());
        for (std::size_t i = 0; i < t.drift.size(); ++i) t.drift[i] += corr[i];
    }
    return t;
}

Vec LevyModel::sample_increment(double dt, Rng& rng, bool mirror) const {
    if (dt <= 0.0) throw std::invalid_argument("increment step must be positive");
    if (mirror && !mirrorable())
        throw std::invalid_argument("mirrored sampling requires a symmetric model");
    const double sign = mirror ? -1.0 : 1.0;
    Vec inc(dim(), 0.0);
    for (std::size_t i = 0; i < dim(); ++i) inc[i] = drift_[i] * dt;
    if (has_gaussian_part()) {
        Vec z(dim());
        for (auto& v : z) v = rng.gaussian();
        const Vec g = chol_.mul(z);
        const double s = std::sqrt(dt) * sign;
        for (std::size_t i = 0; i < dim(); ++i) inc[i] += s * g[i];
    }
    for (const auto& c : jumps_) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, CompoundPoisson>) {
                    const std::uint64_t n = rng.poisson(s.rate * dt);
                    for (std::uint64_t k = 0; k < n; ++k)
                        inc[s.axis] += sign * s.dist.sample(rng);
                } else if constexpr (std::is_same_v<T, SymmetricStable>) {
                    const double sc = std::pow(s.scale * dt, 1.0 / s.alpha);
                    inc[s.axis] += sign * sc * rng.sym_stable(s.alpha);
                } else if constexpr (std::is_same_v<T, GammaSubordinator>) {
                    inc[s.axis] += rng.gamma_draw(s.shape * dt, s.rate);
                } else {
                    for (const auto& atom : s.atoms) {
                        const std::uint64_t n = rng.poisson(atom.rate * dt);
                        for (std::size_t i = 0; i < dim(); ++i)
                            inc[i] += sign * static_cast<double>(n) * atom.jump[i];
                    }
                }
            },
            c);
    }
    return inc;
}

std::vector<JumpEvent> LevyModel::sample_jump_events(double T, Rng& rng) const {
    if (T <= 0.0) throw std::invalid_argument("horizon must be positive");
    std::vector<JumpEvent> events;
    for (const auto& c : jumps_) {
        std::visit(
            [&](const auto& s) {
                using T2 = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T2, CompoundPoisson>) {
                    double t = rng.exponential(s.rate);
                    while (t < T) {
                        Vec size(dim(), 0.0);
                        size[s.axis] = s.dist.sample(rng);
                        events.push_back({t, std::move(size)});
                        t += rng.exponential(s.rate);
                    }
                } else if constexpr (std::is_same_v<T2, FiniteAtomic>) {
                    for (const auto& atom : s.atoms) {
                        double t = rng.exponential(atom.rate);
                        while (t < T) {
                            events.push_back({t, atom.jump});
                            t += rng.exponential(atom.rate);
                        }
                    }
                }
                // stable and gamma parts are not enumerable; handled per grid cell
            },
            c);
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const JumpEvent& a, const JumpEvent& b) { return a.time < b.time; });
    return events;
}

Complex char_exponent(const LevyModel& m, std::span<const double> xi) {
    return m.char_exponent(xi);
}

Complex char_exponent(const LevyTriplet& t, std::span<const double> xi) {
    const std::size_t d = t.drift.size();
    if (xi.size() != d) throw std::invalid_argument("frequency dimension mismatch");
    Complex psi(0.5 * t.gaussian.quad(xi), -dot(t.drift, xi));
    for (const auto& c : t.jumps) {
        psi += component_exponent(c, xi);
        // undo the driftless convention: the triplet form subtracts the truncated compensator
        psi += Complex(0.0, dot(component_unit_ball_mean(c, d), xi));
    }
    return psi;
}

namespace {

double measure_index(const JumpComponent& c) {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SymmetricStable>) {
                return s.alpha;
            } else {
                return 0.0;  // finite activity or finite variation with light small-jump mass
            }
        },
        c);
}

double exponent_growth_index(const JumpComponent& c) { return measure_index(c); }

}  // namespace

ClassicalIndices classical_indices(const LevyModel& m, bool with_numeric) {
    ClassicalIndices ix;
    bool has_drift = false;
    for (double v : m.path_drift())
        if (v != 0.0) has_drift = true;
    const bool has_gauss = m.has_gaussian_part();

    double beta_measure = 0.0, beta_jump = 0.0;
    for (const auto& c : m.jumps()) {
        beta_measure = std::max(beta_measure, measure_index(c));
        beta_jump = std::max(beta_jump, exponent_growth_index(c));
    }
    ix.beta = std::max(beta_measure, has_gauss ? 2.0 : 0.0);
    ix.beta1 = std::max({beta_jump, has_gauss ? 2.0 : 0.0, has_drift ? 1.0 : 0.0});
    ix.beta2 = std::max(beta_jump, has_gauss ? 2.0 : 0.0);

    if (with_numeric) {
        // slope of log |psi| along scale doublings, maximized over directions
        const auto dirs = unit_directions(m.dim(), m.dim() == 1 ? 2 : 16);
        double best = 0.0;
        bool any = false;
        for (const auto& u : dirs) {
            Vec xs, ys;
            for (int k = 4; k <= 16; ++k) {
                const double r = std::ldexp(1.0, k);
                const double v = std::abs(m.char_exponent(scaled(u, r)));
                if (v <= 0.0) continue;
                xs.push_back(k * std::log(2.0));
                ys.push_back(std::log(v));
            }
            if (xs.size() < 4) continue;
            const std::size_t h = xs.size() / 2;
            const LineFit f = fit_line(std::span(xs).subspan(h), std::span(ys).subspan(h));
            best = std::max(best, f.slope);
            any = true;
        }
        ix.beta1_numeric = any ? std::max(0.0, best) : 0.0;
        ix.beta1_gap = std::abs(ix.beta1 - *ix.beta1_numeric);
    }
    return ix;
}

Vec sample_increment(const LevyModel& m, double dt, Rng& rng) {
    return m.sample_increment(dt, rng);
}

}  // namespace levyvar::levy
