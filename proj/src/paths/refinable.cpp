#include "levyvar/paths/refinable.hpp"

#include <cmath>
#include <stdexcept>

#include "levyvar/core/rng.hpp"

namespace levyvar::paths {

SamplePath restrict_to_level(const SamplePath& fine, int fine_level, int level) {
    if (level < 1 || level > fine_level) throw std::invalid_argument("bad restriction level");
    const std::size_t stride = static_cast<std::size_t>(1) << (fine_level - level);
    const std::size_t n_fine = fine.size() - 1;
    if (n_fine != (static_cast<std::size_t>(1) << fine_level))
        throw std::invalid_argument("path size does not match the stated fine level");
    const std::size_t n = n_fine >> (fine_level - level);

    SamplePath out;
    out.dim = fine.dim;
    out.scheme = fine.scheme;
    out.seed = fine.seed;
    out.jumps = fine.jumps;
    out.status = fine.status;
    out.times.resize(n + 1);
    out.values.resize((n + 1) * fine.dim);
    for (std::size_t j = 0; j <= n; ++j) {
        const std::size_t i = j * stride;
        out.times[j] = fine.times[i];
        for (std::size_t k = 0; k < fine.dim; ++k)
            out.values[j * fine.dim + k] = fine.values[i * fine.dim + k];
    }
    return out;
}

namespace {

std::vector<double> coarsen_cells(std::span<const double> fine, int fine_level, int level) {
    const std::size_t stride = static_cast<std::size_t>(1) << (fine_level - level);
    const std::size_t n = fine.size() >> (fine_level - level);
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t s = 0; s < stride; ++s) out[j] += fine[j * stride + s];
    return out;
}

class LevyRefinable final : public RefinablePath {
public:
    LevyRefinable(const levy::LevyModel& model, double horizon, int finest, std::uint64_t seed)
        : finest_(finest), path_(simulate_levy(model, GridSpec{horizon, finest}, seed)) {}

    SamplePath at_level(int level) const override {
        if (level == finest_) return path_;
        return restrict_to_level(path_, finest_, level);
    }
    int finest_level() const override { return finest_; }

private:
    int finest_;
    SamplePath path_;
};

class BnsRefinable final : public RefinablePath {
public:
    BnsRefinable(BnsModel model, double horizon, int finest, std::uint64_t seed)
        : model_(std::move(model)), horizon_(horizon), finest_(finest) {
        Rng rng(seed);
        if (model_.alpha_rate > 0.0) {
            const auto raw =
                model_.subordinator.sample_jump_events(model_.alpha_rate * horizon, rng);
            for (const auto& e : raw) events_.push_back({e.time / model_.alpha_rate, e.size});
        }
        const GridSpec fine{horizon, finest};
        const double root_dt = std::sqrt(fine.mesh());
        dw_.resize(fine.steps());
        for (auto& x : dw_) x = root_dt * rng.gaussian();
        seed_ = seed;
    }

    SamplePath at_level(int level) const override {
        const GridSpec grid{horizon_, level};
        std::span<const double> dw(dw_);
        if (level != finest_) {
            coarse_ = coarsen_cells(dw_, finest_, level);
            dw = coarse_;
        }
        SamplePath p = bns_from_inputs(model_, grid, events_, dw);
        p.seed = seed_;
        return p;
    }
    int finest_level() const override { return finest_; }

private:
    BnsModel model_;
    double horizon_;
    int finest_;
    std::uint64_t seed_ = 0;
    std::vector<PathJump> events_;
    std::vector<double> dw_;
    mutable std::vector<double> coarse_;
};

class CogarchRefinable final : public RefinablePath {
public:
    CogarchRefinable(CogarchModel model, double horizon, int finest, std::uint64_t seed)
        : model_(std::move(model)), horizon_(horizon), finest_(finest) {
        Rng rng(seed);
        for (const auto& e : model_.driver.sample_jump_events(horizon, rng))
            events_.push_back({e.time, e.size});
        if (model_.driver.has_gaussian_part()) {
            const GridSpec fine{horizon, finest};
            const double root_dt = std::sqrt(fine.mesh());
            dw_.resize(fine.steps());
            for (auto& x : dw_) x = root_dt * rng.gaussian();
        }
        seed_ = seed;
    }

    SamplePath at_level(int level) const override {
        const GridSpec grid{horizon_, level};
        std::span<const double> dw(dw_);
        if (!dw_.empty() && level != finest_) {
            coarse_ = coarsen_cells(dw_, finest_, level);
            dw = coarse_;
        }
        SamplePath p = cogarch_from_inputs(model_, grid, events_, dw);
        p.seed = seed_;
        return p;
    }
    int finest_level() const override { return finest_; }

private:
    CogarchModel model_;
    double horizon_;
    int finest_;
    std::uint64_t seed_ = 0;
    std::vector<PathJump> events_;
    std::vector<double> dw_;
    mutable std::vector<double> coarse_;
};

class StableLikeRefinable final : public RefinablePath {
public:
    StableLikeRefinable(StableLikeField field, double x0, double horizon, int finest,
                        std::uint64_t seed)
        : field_(std::move(field)), x0_(x0), horizon_(horizon), finest_(finest), seed_(seed) {}

    SamplePath at_level(int level) const override {
        return simulate_stable_like(field_, x0_, GridSpec{horizon_, level},
                                    derive_seed(seed_, "stable-like-level",
                                                static_cast<std::uint64_t>(level)));
    }
    int finest_level() const override { return finest_; }

private:
    StableLikeField field_;
    double x0_;
    double horizon_;
    int finest_;
    std::uint64_t seed_;
};

}  // namespace

std::unique_ptr<RefinablePath> make_levy_refinable(const levy::LevyModel& model, double horizon,
                                                   int finest, std::uint64_t seed) {
    return std::make_unique<LevyRefinable>(model, horizon, finest, seed);
}

std::unique_ptr<RefinablePath> make_bns_refinable(const BnsModel& model, double horizon,
                                                  int finest, std::uint64_t seed) {
    return std::make_unique<BnsRefinable>(model, horizon, finest, seed);
}

std::unique_ptr<RefinablePath> make_cogarch_refinable(const CogarchModel& model, double horizon,
                                                      int finest, std::uint64_t seed) {
    return std::make_unique<CogarchRefinable>(model, horizon, finest, seed);
}

std::unique_ptr<RefinablePath> make_stable_like_refinable(const StableLikeField& field, double x0,
                                                          double horizon, int finest,
                                                          std::uint64_t seed) {
    return std::make_unique<StableLikeRefinable>(field, x0, horizon, finest, seed);
}

}  // namespace levyvar::paths
