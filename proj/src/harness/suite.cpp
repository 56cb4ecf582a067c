#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <vector>

#include "levyvar/core/format.hpp"
#include "levyvar/core/parallel.hpp"
#include "levyvar/core/rng.hpp"
#include "levyvar/core/stats.hpp"
#include "levyvar/harness/experiment.hpp"
#include "levyvar/levy/model.hpp"
#include "levyvar/paths/bns.hpp"
#include "levyvar/paths/cantor.hpp"
#include "levyvar/paths/cogarch.hpp"
#include "levyvar/paths/gou.hpp"
#include "levyvar/paths/refinable.hpp"
#include "levyvar/paths/sde.hpp"
#include "levyvar/pvar/pvar.hpp"
#include "levyvar/pvar/variation_index.hpp"
#include "levyvar/symbols/d_integral.hpp"
#include "levyvar/symbols/indices.hpp"
#include "levyvar/symbols/mc_estimators.hpp"
#include "levyvar/symbols/state_symbol.hpp"

namespace levyvar::harness {
namespace {

using levy::LevyModel;

Json num(double v) {
    if (std::isnan(v)) return "nan";
    if (!std::isfinite(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

void record_index(Json& metrics, const std::string& key, const symbols::IndexEstimate& e) {
    metrics[key] = Json{{"value", num(e.value)},
                        {"slope", e.slope},
                        {"rms_residual", e.rms_residual},
                        {"unbounded", e.unbounded}};
}

pvar::VarIndexReport run_variation(const paths::RefinableFactory& factory, const Json& params,
                                   const BodyCtx& ctx, const std::string& id,
                                   std::optional<std::size_t> coordinate, ExperimentReport& out) {
    const auto levels = params.at("levels").get<std::vector<int>>();
    const auto p_grid = params.at("p_grid").get<std::vector<double>>();
    const auto rep = pvar::variation_index_estimate(
        factory, levels, p_grid, params.at("paths").get<std::size_t>(),
        derive_seed(ctx.seed, id), coordinate, {}, ctx.workers);

    Json rows = Json::array();
    for (const auto& row : rep.rows)
        rows.push_back(Json{{"p", row.p},
                            {"ratio", num(row.ratio)},
                            {"verdict", pvar::to_string(row.verdict)}});
    out.metrics["rows"] = rows;
    out.metrics["v_hat"] = rep.v_hat;
    out.metrics["boundary"] = rep.boundary;
    out.metrics["dropped_paths"] = rep.dropped_paths;
    std::ofstream(ctx.dir / "variation.csv", std::ios::binary) << rep.csv();
    return rep;
}

paths::RefinableFactory levy_refinable_factory(LevyModel model, int finest) {
    return [model = std::move(model), finest](std::uint64_t seed) {
        return paths::make_levy_refinable(model, 1.0, finest, seed);
    };
}

// Bounded state-dependent full-rank coefficient field on R^3: a damped shear
// whose transpose is onto for every x, so the driver index transfers.
paths::CoeffField damped_shear_field() {
    paths::CoeffField f;
    f.state_dim = 3;
    f.driver_dim = 3;
    f.label = "damped-shear";
    f.bounded = true;
    f.lipschitz = true;
    f.phi = [](std::span<const double> x) {
        const double r = 0.75 + 0.25 * std::sin(x[0]);
        Mat m = Mat::from_rows({{1.0, 0.0, 0.0}, {0.2, 1.0, 0.0}, {0.0, 0.3, 1.0}});
        Mat out(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) out(i, j) = r * m(i, j);
        return out;
    };
    return f;
}

LevyModel trivariate_driver() {
    return LevyModel::product({LevyModel::pure_drift(Vec{1.0}), LevyModel::symmetric_stable(1.2),
                               LevyModel::brownian()},
                              "trivariate");
}

Experiment make_pvar_oracle() {
    Experiment e;
    e.id = "pvar-oracle";
    e.claim = "The exact p-variation dynamic program agrees with brute-force partition "
              "enumeration on short random sequences to floating-point round-off.";
    // Bitwise equality is out of reach: the two methods associate the partition sums
    // differently, and at p=1 distinct partitions tie in real arithmetic, so the
    // agreement threshold is round-off level, far below any estimator tolerance.
    e.defaults = Json{{"sequences", 500},
                      {"max_len", 12},
                      {"p_grid", {0.5, 1.0, 1.5, 2.0, 3.0}},
                      {"rel_tol", 1e-12}};
    e.body = [](const Json& params, const BodyCtx& ctx, ExperimentReport& out) {
        const auto n_seq = params.at("sequences").get<std::size_t>();
        const auto max_len = params.at("max_len").get<std::size_t>();
        const auto p_grid = params.at("p_grid").get<std::vector<double>>();
        const double rel_tol = params.at("rel_tol").get<double>();
        std::size_t mismatches = 0;
        std::size_t comparisons = 0;
        double max_rel_diff = 0.0;
        for (std::size_t i = 0; i < n_seq; ++i) {
            Rng rng(derive_seed(ctx.seed, "pvar-oracle", i));
            const std::size_t dim = 1 + i % 2;
            const std::size_t len = 4 + rng.next_u64() % (max_len - 3);
            std::vector<double> values(len * dim);
            for (double& v : values) v = rng.gaussian();
            const pvar::SeqView seq{values, dim};
            for (const double p : p_grid) {
                const double exact = pvar::pvar_exact(seq, p).value;
                const double brute = pvar::pvar_bruteforce(seq, p).value;
                const double rel = std::abs(exact - brute) / std::max(1.0, std::abs(brute));
                max_rel_diff = std::max(max_rel_diff, rel);
                if (rel > rel_tol) ++mismatches;
                ++comparisons;
            }
        }
        out.metrics = Json{{"sequences", n_seq},
                           {"comparisons", comparisons},
                           {"mismatches", mismatches},
                           {"max_rel_diff", max_rel_diff}};
        out.verdict = mismatches == 0 ? RunVerdict::pass : RunVerdict::fail;
    };
    return e;
}

Experiment make_stable_dichotomy() {
    Experiment e;
    e.id = "stable-dichotomy-1.2";
    e.claim = "Symmetric 1.2-stable paths on [0,1] have infinite p-variation at p=1.0 and "
              "finite p-variation at p=1.5.";
    e.defaults = Json{{"alpha", 1.2},
                      {"paths", 50},
                      {"levels", {8, 11, 14}},
                      {"p_grid", {1.0, 1.5}},
                      {"min_infinite_ratio", 1.2}};
    e.body = [](const Json& params, const BodyCtx& ctx, ExperimentReport& out) {
        const double alpha = params.at("alpha").get<double>();
        const auto levels = params.at("levels").get<std::vector<int>>();
        const auto rep = run_variation(
            levy_refinable_factory(LevyModel::symmetric_stable(alpha), levels.back()), params,
            ctx, "stable-dichotomy-1.2", {}, out);
        const bool infinite_low = rep.rows.front().verdict == pvar::Verdict::infinite &&
                                  rep.rows.front().ratio >=
                                      params.at("min_infinite_ratio").get<double>();
        const bool finite_high = rep.rows.back().verdict == pvar::Verdict::finite;
        out.verdict = infinite_low && finite_high ? RunVerdict::pass : RunVerdict::fail;
    };
    return e;
}

Experiment make_bm_index() {
    Experiment e;
    e.id = "bm-index";
    e.claim = "Brownian paths have variation index 2: the dichotomy brackets v_hat inside "
              "2 +/- 0.15.";
    e.defaults = Json{
        {"paths", 16}, {"levels", {7, 10, 13}}, {"p_grid", {1.5, 2.5}}, {"tolerance", 0.15}};
    e.body = [](const Json& params, const BodyCtx& ctx, ExperimentReport& out) {
        const auto levels = params.at("levels").get<std::vector<int>>();
        const auto rep = run_variation(levy_refinable_factory(LevyModel::brownian(), levels.back()),
                                       params, ctx, "bm-index", {}, out);
        const double tol = params.at("tolerance").get<double>();
        out.metrics["abs_error"] = std::abs(rep.v_hat - 2.0);
        out.verdict = !rep.boundary && std::abs(rep.v_hat - 2.0) <= tol ? RunVerdict::pass
                                                                        : RunVerdict::fail;
    };
    return e;
}

Experiment make_stablelike_index() {
    Experiment e;
    e.id = "stablelike-index";
    e.claim = "For the stable-like symbol |xi|^{2a(x)} with a(x)=0.3+0.2 sin^2 x the uniform "
              "index equals 2 sup a = 1.0 and the local index at 0 equals 2a(0) = 0.6.";
    e.defaults = Json{{"x_points", 33}, {"half_width", 3.0}, {"tolerance", 0.05}};
    e.body = [](const Json& params, const BodyCtx&, ExperimentReport& out) {
        const GridCfg cfg{16, 8, params.at("x_points").get<int>()};
        const auto sym =
            symbols::stable_like_symbol(paths::StableLikeField::sin_modulated(0.3, 0.2));
        const Box domain = Box::centered(Vec{0.0}, params.at("half_width").get<double>());
        const auto unif = symbols::index_beta_inf_unif(sym, domain, cfg);
        const auto loc = symbols::index_beta_loc(sym, Vec{0.0}, cfg);
        record_index(out.metrics, "beta_inf_unif", unif);
        record_index(out.metrics, "beta_loc_at_0", loc);
        const double tol = params.at("tolerance").get<double>();
        out.verdict = std::abs(unif.value - 1.0) <= tol && std::abs(loc.value - 0.6) <= tol
                          ? RunVerdict::pass
                          : RunVerdict::fail;
    };
    return e;
}

Experiment make_gbm_symbol_mc() {
    Experiment e;
    e.id = "gbm-symbol-mc";
    e.claim = "The small-time stopped Monte Carlo estimator recovers the geometric Brownian "
              "motion symbol value q(1, 2) = 2 within 0.2.";
    e.defaults = Json{{"t", 1e-4}, {"n", 200000}, {"radius", 1.0}, {"tolerance", 0.2}};
    e.body = [](const Json& params, const BodyCtx& ctx, ExperimentReport& out) {
        const paths::SdeModel sde(paths::CoeffField::linear_1d(), LevyModel::brownian(),
                                  Vec{1.0}, "gbm");
        const auto sampler = symbols::stopped_sde_sampler(sde);
        const auto est = symbols::mc_symbol_estimate(
            sampler, Vec{2.0}, params.at("t").get<double>(), params.at("n").get<std::size_t>(),
            params.at("radius").get<double>(), derive_seed(ctx.seed, "gbm-symbol-mc"),
            ctx.workers);
        const double err = std::abs(est.value.real() - 2.0);
        out.metrics = Json{{"estimate_re", est.value.real()},
                           {"estimate_im", est.value.imag()},
                           {"std_error", est.std_error},
                           {"abs_error", err},
                           {"replicas", est.replicas}};
        out.verdict =
            err <= params.at("tolerance").get<double>() ? RunVerdict::pass : RunVerdict::fail;
    };
    return e;
}

Experiment make_gbm_indices() {
    Experiment e;
    e.id = "gbm-indices";
    e.claim = "The linear-coefficient diffusion has spot index 2 at x=1, spot index 0 at x=0, "
              "and an unbounded uniform maximal functional.";
    e.defaults = Json{{"x_points", 33}, {"tolerance", 0.05}};
    e.body = [](const Json& params, const BodyCtx&, ExperimentReport& out) {
        const GridCfg cfg{16, 8, params.at("x_points").get<int>()};
        const auto sym = symbols::gbm_symbol();
        const auto spot1 = symbols::index_spot(sym, Vec{1.0}, cfg);
        const auto spot0 = symbols::index_spot(sym, Vec{0.0}, cfg);
        const auto unif = symbols::index_beta_inf_unif(sym, Box::centered(Vec{0.0}, 2.0), cfg);
        record_index(out.metrics, "spot_at_1", spot1);
        record_index(out.metrics, "spot_at_0", spot0);
        record_index(out.metrics, "beta_inf_unif", unif);
        const double tol = params.at("tolerance").get<double>();
        out.verdict = std::abs(spot1.value - 2.0) <= tol && std::abs(spot0.value) <= tol &&
                              unif.unbounded
                          ? RunVerdict::pass
                          : RunVerdict::fail;
    };
    return e;
}

Experiment make_index_sandwich() {
    Experiment e;
    e.id = "index-sandwich";
    e.claim = "On every finite-index builtin model the estimated indices satisfy "
              "beta_loc <= beta_inf_unif1 <= beta_inf_unif up to 0.05.";
    e.defaults = Json{{"x_points", 33}, {"tolerance", 0.05}};
    e.body = [](const Json& params, const BodyCtx&, ExperimentReport& out) {
        const GridCfg cfg{16, 8, params.at("x_points").get<int>()};
        struct Case {
            std::string name;
            symbols::StateSymbol sym;
            double half_width;
        };
        const std::vector<Case> cases = {
            {"stable-1.2", symbols::levy_symbol(LevyModel::symmetric_stable(1.2)), 2.0},
            {"stable-0.7-drift",
             symbols::levy_symbol(LevyModel::symmetric_stable(0.7).with_drift(Vec{1.0})), 2.0},
            {"brownian", symbols::levy_symbol(LevyModel::brownian()), 2.0},
            {"cp-normal",
             symbols::levy_symbol(
                 LevyModel::compound_poisson(1.0, levy::JumpDist(levy::NormalJump{0.0, 1.0}))),
             2.0},
            {"stable-like-sin",
             symbols::stable_like_symbol(paths::StableLikeField::sin_modulated(0.3, 0.2)), 3.0},
        };
        const double tol = params.at("tolerance").get<double>();
        bool ok = true;
        Json per_model = Json::object();
        for (const auto& c : cases) {
            const Box domain = Box::centered(Vec{0.0}, c.half_width);
            const double loc = symbols::index_beta_loc(c.sym, Vec{0.0}, cfg).value;
            const double unif1 = symbols::index_beta_inf_unif1(c.sym, domain, cfg).value;
            const double unif = symbols::index_beta_inf_unif(c.sym, domain, cfg).value;
            per_model[c.name] =
                Json{{"beta_loc", num(loc)}, {"beta_inf_unif1", num(unif1)},
                     {"beta_inf_unif", num(unif)}};
            ok = ok && loc <= unif1 + tol && unif1 <= unif + tol;
        }
        out.metrics["models"] = per_model;
        out.verdict = ok ? RunVerdict::pass : RunVerdict::fail;
    };
    return e;
}

Experiment make_sde_transfer() {
    Experiment e;
    e.id = "sde-transfer";
    e.claim = "A bounded coefficient field whose transpose is onto transfers the driver growth "
              "index (2) to the solution symbol; the rank-deficient projection onto the first "
              "two driver coordinates drops the index to max(1, 1.2).";
    e.defaults = Json{{"x_points_full", 3}, {"x_points_proj", 9}, {"tolerance", 0.05}};
    e.body = [](const Json& params, const BodyCtx&, ExperimentReport& out) {
        const LevyModel driver = trivariate_driver();
        const double beta1 = levy::classical_indices(driver, false).beta1;

        const GridCfg cfg_full{16, 4, params.at("x_points_full").get<int>()};
        const auto sym_full = symbols::sde_symbol(driver, damped_shear_field());
        const auto unif_full =
            symbols::index_beta_inf_unif(sym_full, Box::centered(Vec{0.0, 0.0, 0.0}, 2.0),
                                         cfg_full);

        const GridCfg cfg_proj{16, 8, params.at("x_points_proj").get<int>()};
        const auto sym_proj = symbols::sde_symbol(driver, paths::CoeffField::projection_12_of_3());
        const auto unif_proj =
            symbols::index_beta_inf_unif(sym_proj, Box::centered(Vec{0.0, 0.0}, 2.0), cfg_proj);

        const double expected_proj = std::max(1.0, 1.2);
        record_index(out.metrics, "full_rank", unif_full);
        record_index(out.metrics, "projection", unif_proj);
        out.metrics["driver_beta1"] = beta1;
        out.metrics["expected_projection"] = expected_proj;
        const double tol = params.at("tolerance").get<double>();
        out.verdict = std::abs(unif_full.value - beta1) <= tol &&
                              std::abs(unif_proj.value - expected_proj) <= tol
                          ? RunVerdict::pass
                          : RunVerdict::fail;
    };
    return e;
}

Experiment make_d_dichotomy() {
    Experiment e;
    e.id = "d-dichotomy";
    e.claim = "For 1.2-stable jumps the moment integral D(lambda) diverges at lambda=1.0 and at "
              "lambda=1.5 matches the closed form 2 c Gamma(1 - alpha/lambda) / alpha to 1e-6.";
    e.defaults =
        Json{{"alpha", 1.2}, {"lambda_div", 1.0}, {"lambda_conv", 1.5}, {"rel_tol", 1e-6}};
    e.body = [](const Json& params, const BodyCtx&, ExperimentReport& out) {
        const double alpha = params.at("alpha").get<double>();
        const double l_div = params.at("lambda_div").get<double>();
        const double l_conv = params.at("lambda_conv").get<double>();
        const auto triplet =
            symbols::StateTriplet::from_model(LevyModel::symmetric_stable(alpha));
        const auto div = symbols::d_integral(triplet, Vec{0.0}, l_div);
        const auto conv = symbols::d_integral(triplet, Vec{0.0}, l_conv);

        const double k_alpha =
            std::tgamma(2.0 - alpha) * std::cos(M_PI * alpha / 2.0) / (alpha * (1.0 - alpha));
        const double c = 1.0 / (2.0 * k_alpha);
        const double oracle = 2.0 * c * std::tgamma(1.0 - alpha / l_conv) / alpha;
        const double rel_err = std::abs(conv.value - oracle) / oracle;

        out.metrics = Json{{"diverges_at_low_lambda", div.diverges},
                           {"divergent_value", num(div.value)},
                           {"convergent_value", conv.value},
                           {"oracle", oracle},
                           {"rel_error", rel_err}};
        out.verdict = div.diverges && !conv.diverges &&
                              rel_err <= params.at("rel_tol").get<double>()
                          ? RunVerdict::pass
                          : RunVerdict::fail;
    };
    return e;
}

Experiment make_h_trend() {
    Experiment e;
    e.id = "h-trend";
    e.claim = "The small-time functional (1 - E exp(-|X_t|^lambda)) / t grows by at least x3 "
              "from t=1e-2 to t=1e-4 below the index (lambda=0.8) and stays within a factor 2 "
              "above it (lambda=1.5).";
    e.defaults = Json{{"alpha", 1.2},     {"lambda_grow", 0.8}, {"lambda_flat", 1.5},
                      {"t_small", 1e-4},  {"t_big", 1e-2},      {"n", 50000},
                      {"radius", 50.0},   {"grow_factor", 3.0}, {"flat_band", 2.0}};
    e.body = [](const Json& params, const BodyCtx& ctx, ExperimentReport& out) {
        const auto sampler = symbols::stopped_levy_sampler(
            LevyModel::symmetric_stable(params.at("alpha").get<double>()), Vec{0.0});
        const double radius = params.at("radius").get<double>();
        const auto n = params.at("n").get<std::size_t>();
        const double t_small = params.at("t_small").get<double>();
        const double t_big = params.at("t_big").get<double>();
        auto estimate = [&](double lambda, double t, std::uint64_t k) {
            return symbols::mc_h_estimate(sampler, lambda, radius, t, n,
                                          derive_seed(ctx.seed, "h-trend", k), ctx.workers);
        };
        const auto grow_small = estimate(params.at("lambda_grow").get<double>(), t_small, 0);
        const auto grow_big = estimate(params.at("lambda_grow").get<double>(), t_big, 1);
        const auto flat_small = estimate(params.at("lambda_flat").get<double>(), t_small, 2);
        const auto flat_big = estimate(params.at("lambda_flat").get<double>(), t_big, 3);
        const double growth = grow_small.value / grow_big.value;
        const double flat = flat_small.value / flat_big.value;
        out.metrics = Json{{"grow_small_t", grow_small.value}, {"grow_big_t", grow_big.value},
                           {"growth_ratio", growth},           {"flat_small_t", flat_small.value},
                           {"flat_big_t", flat_big.value},     {"flat_ratio", flat}};
        const double band = params.at("flat_band").get<double>();
        out.verdict = growth >= params.at("grow_factor").get<double>() && flat <= band &&
                              flat >= 1.0 / band
                          ? RunVerdict::pass
                          : RunVerdict::fail;
    };
    return e;
}

Experiment make_cogarch_closedform() {
    Experiment e;
    e.id = "cogarch-closedform";
    e.claim = "Sampled COGARCH volatility matches the exponential representation "
              "(b int e^{A} + sigma0^2) e^{-A} to 1e-8 relative; the price total variation "
              "stays bounded under grid refinement when the driver has finite variation.";
    e.defaults = Json{{"paths", 20},      {"level", 8},          {"rel_tol", 1e-8},
                      {"v1_levels", {8, 10, 12}}, {"v1_slack", 1.1}};
    e.body = [](const Json& params, const BodyCtx& ctx, ExperimentReport& out) {
        const auto driver =
            LevyModel::compound_poisson(5.0, levy::JumpDist(levy::NormalJump{0.0, 1.0}));
        const paths::CogarchModel model(driver, 0.95, 0.04, 1.0, 1.0);
        const paths::GridSpec grid{1.0, params.at("level").get<int>()};
        const auto n_paths = params.at("paths").get<std::size_t>();

        double max_rel = 0.0;
        for (std::size_t i = 0; i < n_paths; ++i) {
            const std::uint64_t seed = derive_seed(ctx.seed, "cogarch-closedform", i);
            const auto p = paths::simulate_cogarch(model, grid, seed);
            Rng rng(seed);  // events are drawn first, so they regenerate from the seed
            std::vector<paths::PathJump> events;
            for (const auto& ev : driver.sample_jump_events(grid.horizon, rng))
                events.push_back({ev.time, ev.size});
            const auto closed = paths::cogarch_volatility_closed_form(model, p.times, events);
            for (std::size_t k = 0; k < p.size(); ++k)
                max_rel = std::max(max_rel,
                                   std::abs(p.values[k * 2 + 1] - closed[k]) /
                                       std::abs(closed[k]));
        }

        const auto fv_driver =
            LevyModel::compound_poisson(6.0, levy::JumpDist(levy::UniformJump{-1.0, 1.0}));
        const paths::CogarchModel fv_model(fv_driver, 0.9, 0.05, 1.0, 1.0);
        const auto v1_levels = params.at("v1_levels").get<std::vector<int>>();
        double max_v1_ratio = 0.0;
        for (std::size_t i = 0; i < n_paths; ++i) {
            const auto ref = paths::make_cogarch_refinable(
                fv_model, 1.0, v1_levels.back(),
                derive_seed(ctx.seed, "cogarch-closedform", 1000 + i));
            const double coarse =
                pvar::pvar_exact(ref->at_level(v1_levels.front()).coordinate(0), 1.0).value;
            const double fine =
                pvar::pvar_exact(ref->at_level(v1_levels.back()).coordinate(0), 1.0).value;
            if (coarse > 0.0) max_v1_ratio = std::max(max_v1_ratio, fine / coarse);
        }

        out.metrics = Json{{"max_rel_error", max_rel}, {"max_v1_ratio", max_v1_ratio}};
        out.verdict = max_rel <= params.at("rel_tol").get<double>() &&
                              max_v1_ratio <= params.at("v1_slack").get<double>()
                          ? RunVerdict::pass
                          : RunVerdict::fail;
    };
    return e;
}

Experiment make_bns_gvar() {
    Experiment e;
    e.id = "bns-gvar";
    e.claim = "The OU stochastic-volatility log-price, a time-changed Brownian integral, has "
              "variation index 2.";
    // The wider symmetric grid gives the finite side a faster-converging exponent;
    // at p=2.5 the level-13 ratio still sits on the 1.1 threshold.
    e.defaults = Json{
        {"paths", 20}, {"levels", {7, 10, 13}}, {"p_grid", {1.2, 2.8}}, {"tolerance", 0.15}};
    e.body = [](const Json& params, const BodyCtx& ctx, ExperimentReport& out) {
        const paths::BnsModel model(
            LevyModel::compound_poisson(4.0, levy::JumpDist(levy::ExponentialJump{2.0})), 1.7,
            0.0, 0.0, 1.0);
        const auto levels = params.at("levels").get<std::vector<int>>();
        const paths::RefinableFactory factory = [model, finest = levels.back()](
                                                    std::uint64_t seed) {
            return paths::make_bns_refinable(model, 1.0, finest, seed);
        };
        const auto rep = run_variation(factory, params, ctx, "bns-gvar", 2, out);
        const double tol = params.at("tolerance").get<double>();
        out.metrics["abs_error"] = std::abs(rep.v_hat - 2.0);
        out.verdict = !rep.boundary && std::abs(rep.v_hat - 2.0) <= tol ? RunVerdict::pass
                                                                        : RunVerdict::fail;
    };
    return e;
}

Experiment make_gou_gaussian() {
    Experiment e;
    e.id = "gou-gaussian";
    e.claim = "Euler simulation of dX = -X dt + dW reproduces the stationary-approach "
              "variance Var(X_1) = (1 - e^{-2}) / 2 within three standard errors.";
    e.defaults = Json{{"paths", 10000}, {"level", 8}};
    e.body = [](const Json& params, const BodyCtx& ctx, ExperimentReport& out) {
        const auto model = paths::GouModel::independent(LevyModel::pure_drift(Vec{-1.0}),
                                                        LevyModel::brownian(), 0.0, 0.0);
        const paths::GridSpec grid{1.0, params.at("level").get<int>()};
        const auto n = params.at("paths").get<std::size_t>();

        using Acc = std::vector<double>;
        const Acc xs = chunked_reduce<Acc>(
            n, ctx.workers, [] { return Acc{}; },
            [&](Acc& acc, std::uint64_t r) {
                const auto p = paths::simulate_gou(model, grid,
                                                   derive_seed(ctx.seed, "gou-gaussian", r));
                acc.push_back(p.values.back());
            },
            [](Acc& into, const Acc& from) {
                into.insert(into.end(), from.begin(), from.end());
            });

        const double target = (1.0 - std::exp(-2.0)) / 2.0;
        const double m = mean(xs);
        const double v = sample_variance(xs);
        double m4 = 0.0;
        for (const double x : xs) m4 += std::pow(x - m, 4);
        m4 /= static_cast<double>(xs.size());
        const double se = std::sqrt(std::max(0.0, m4 - v * v) / static_cast<double>(xs.size()));

        out.metrics = Json{{"variance", v},
                           {"target", target},
                           {"std_error", se},
                           {"abs_error", std::abs(v - target)},
                           {"paths", n}};
        out.verdict = std::abs(v - target) <= 3.0 * se ? RunVerdict::pass : RunVerdict::fail;
    };
    return e;
}

Experiment make_cantor_divergence() {
    Experiment e;
    e.id = "cantor-divergence";
    e.claim = "Cantor-clock quotient ratios approach 3/2 from below; the pinned band "
              "[1.45, 1.55] over n in [5, 15] is checked as stated.";
    e.defaults = Json{{"n_lo", 5}, {"n_hi", 15}, {"band_lo", 1.45}, {"band_hi", 1.55}};
    e.body = [](const Json& params, const BodyCtx&, ExperimentReport& out) {
        const int n_lo = params.at("n_lo").get<int>();
        const int n_hi = params.at("n_hi").get<int>();
        const auto rows = paths::cantor_divergence(n_hi + 1);
        auto quotient = [&](int n) -> double {
            for (const auto& r : rows)
                if (r.n == n) return r.quotient;
            throw std::logic_error("missing cantor row");
        };
        Json ratios = Json::array();
        double min_ratio = std::numeric_limits<double>::infinity();
        double max_ratio = 0.0;
        for (int n = n_lo; n <= n_hi; ++n) {
            const double r = quotient(n + 1) / quotient(n);
            ratios.push_back(Json{{"n", n}, {"ratio", r}});
            min_ratio = std::min(min_ratio, r);
            max_ratio = std::max(max_ratio, r);
        }
        out.metrics = Json{{"ratios", ratios}, {"min_ratio", min_ratio},
                           {"max_ratio", max_ratio}};
        const bool in_band = min_ratio >= params.at("band_lo").get<double>() &&
                             max_ratio <= params.at("band_hi").get<double>();
        out.verdict = in_band ? RunVerdict::pass : RunVerdict::fail;
    };
    return e;
}

Json quick_overrides(const std::string& id) {
    if (id == "pvar-oracle") return Json{{"sequences", 40}};
    if (id == "stable-dichotomy-1.2") return Json{{"paths", 5}, {"levels", {5, 7, 9}}};
    if (id == "bm-index") return Json{{"paths", 4}, {"levels", {5, 7, 9}}};
    if (id == "stablelike-index") return Json{{"x_points", 9}};
    if (id == "gbm-symbol-mc") return Json{{"n", 2000}};
    if (id == "gbm-indices") return Json{{"x_points", 9}};
    if (id == "index-sandwich") return Json{{"x_points", 9}};
    if (id == "sde-transfer") return Json{{"x_points_proj", 5}};
    if (id == "h-trend") return Json{{"n", 2000}};
    if (id == "cogarch-closedform") return Json{{"paths", 3}};
    if (id == "bns-gvar") return Json{{"paths", 4}, {"levels", {5, 7, 9}}};
    if (id == "gou-gaussian") return Json{{"paths", 400}};
    return Json::object();
}

Experiment make_determinism() {
    Experiment e;
    e.id = "determinism";
    e.claim = "Every experiment produces bit-identical metrics across two runs with the same "
              "seed and across worker counts 1 and 4 (checked at reduced replica counts).";
    e.defaults = Json{{"workers_alt", 4}};
    e.body = [](const Json& params, const BodyCtx& ctx, ExperimentReport& out) {
        const int workers_alt = params.at("workers_alt").get<int>();
        Json mismatched = Json::array();
        std::size_t checked = 0;
        for (const auto& exp : builtin_suite()) {
            if (exp.id == "determinism") continue;
            auto run_once = [&](const char* tag, int workers) {
                RunCtx sub;
                sub.seed = ctx.seed;
                sub.out_dir = ctx.dir / "runs" / tag;
                sub.workers = workers;
                sub.overrides = quick_overrides(exp.id);
                return run_experiment(exp.id, sub).metrics.dump();
            };
            const std::string a = run_once("a", 1);
            const std::string b = run_once("b", 1);
            const std::string c = run_once("wide", workers_alt);
            if (a != b || a != c) mismatched.push_back(exp.id);
            ++checked;
        }
        out.metrics = Json{{"experiments_checked", checked},
                           {"mismatched", mismatched},
                           {"workers_compared", Json::array({1, workers_alt})}};
        out.verdict = mismatched.empty() ? RunVerdict::pass : RunVerdict::fail;
    };
    return e;
}

}  // namespace

const std::vector<Experiment>& builtin_suite() {
    static const std::vector<Experiment> suite = [] {
        std::vector<Experiment> s;
        s.push_back(make_pvar_oracle());
        s.push_back(make_stable_dichotomy());
        s.push_back(make_bm_index());
        s.push_back(make_stablelike_index());
        s.push_back(make_gbm_symbol_mc());
        s.push_back(make_gbm_indices());
        s.push_back(make_index_sandwich());
        s.push_back(make_sde_transfer());
        s.push_back(make_d_dichotomy());
        s.push_back(make_h_trend());
        s.push_back(make_cogarch_closedform());
        s.push_back(make_bns_gvar());
        s.push_back(make_gou_gaussian());
        s.push_back(make_cantor_divergence());
        s.push_back(make_determinism());
        return s;
    }();
    return suite;
}

}  // namespace levyvar::harness
