#include "levyvar/config/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "levyvar/paths/simulate.hpp"
#include "levyvar/paths/stable_like.hpp"

namespace levyvar::config {

using levy::JumpDist;
using levy::LevyModel;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument("config: " + msg); }

void expect_object(const Json& j, const std::string& where) {
    if (!j.is_object()) bad(where + " must be a JSON object");
}

void expect_keys(const Json& obj, std::initializer_list<const char*> allowed,
                 const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) bad("unknown key '" + key + "' in " + where);
    }
}

Vec parse_vector(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) bad(where + " must be a non-empty array of numbers");
    Vec v;
    for (const auto& e : j) {
        if (!e.is_number()) bad(where + " must contain numbers only");
        v.push_back(e.get<double>());
    }
    return v;
}

JumpDist parse_jump(const Json& j, const std::string& where) {
    expect_object(j, where);
    const std::string dist = j.value("dist", std::string());
    if (dist == "constant") {
        expect_keys(j, {"dist", "value"}, where);
        return JumpDist(levy::ConstantJump{j.value("value", 1.0)});
    }
    if (dist == "normal") {
        expect_keys(j, {"dist", "mean", "sd"}, where);
        return JumpDist(levy::NormalJump{j.value("mean", 0.0), j.value("sd", 1.0)});
    }
    if (dist == "exponential") {
        expect_keys(j, {"dist", "rate"}, where);
        return JumpDist(levy::ExponentialJump{j.value("rate", 1.0)});
    }
    if (dist == "uniform") {
        expect_keys(j, {"dist", "lo", "hi"}, where);
        return JumpDist(levy::UniformJump{j.value("lo", -1.0), j.value("hi", 1.0)});
    }
    bad(where + ": unknown jump dist '" + dist + "'");
}

ModelEntry levy_entry(std::string name, LevyModel model, double half_width, double horizon) {
    ModelEntry e(std::move(name), "levy", symbols::levy_symbol(model),
                 Box::centered(Vec(model.dim(), 0.0), half_width));
    e.horizon = horizon;
    e.simulate = [model](const paths::GridSpec& grid, std::uint64_t seed) {
        return paths::simulate_levy(model, grid, seed);
    };
    e.refinable = [model, horizon](int finest, std::uint64_t seed) {
        return paths::make_levy_refinable(model, horizon, finest, seed);
    };
    e.levy = std::move(model);
    return e;
}

ModelEntry stable_like_entry(std::string name, paths::StableLikeField field, double x0,
                             double half_width, double horizon) {
    ModelEntry e(std::move(name), "stable-like", symbols::stable_like_symbol(field),
                 Box::centered(Vec{0.0}, half_width));
    e.horizon = horizon;
    e.simulate = [field, x0](const paths::GridSpec& grid, std::uint64_t seed) {
        return paths::simulate_stable_like(field, x0, grid, seed);
    };
    e.refinable = [field, x0, horizon](int finest, std::uint64_t seed) {
        return paths::make_stable_like_refinable(field, x0, horizon, finest, seed);
    };
    return e;
}

ModelEntry sde_entry(std::string name, paths::SdeModel sde, double half_width, double horizon) {
    ModelEntry e(std::move(name), "sde", symbols::sde_symbol(sde.driver, sde.phi),
                 Box::centered(Vec(sde.phi.state_dim, 0.0), half_width));
    e.horizon = horizon;
    e.simulate = [sde](const paths::GridSpec& grid, std::uint64_t seed) {
        return paths::simulate_sde_euler(sde, grid, seed);
    };
    return e;
}

// Levy part of a spec that may be an inline object or the name of a registered
// Levy entry.  `partial` holds the built-ins plus everything parsed so far.
LevyModel parse_levy(const Json& j, const Config& partial, const std::string& where);

LevyModel parse_levy_ref(const Json& j, const Config& partial, const std::string& where) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        const auto it = partial.models.find(name);
        if (it == partial.models.end() || !it->second.levy)
            bad(where + ": '" + name + "' is not a registered Levy model");
        return *it->second.levy;
    }
    return parse_levy(j, partial, where);
}

LevyModel parse_levy(const Json& j, const Config& partial, const std::string& where) {
    expect_object(j, where);
    const std::string type = j.value("type", std::string());
    auto with_common = [&](LevyModel m) {
        if (j.contains("drift")) m = m.with_drift(parse_vector(j.at("drift"), where + ".drift"));
        return m;
    };
    if (type == "brownian") {
        expect_keys(j, {"type", "dim", "variance", "drift", "half_width", "horizon"}, where);
        return with_common(
            LevyModel::brownian(j.value("dim", std::size_t{1}), j.value("variance", 1.0)));
    }
    if (type == "drift") {
        expect_keys(j, {"type", "velocity", "half_width", "horizon"}, where);
        return LevyModel::pure_drift(parse_vector(j.at("velocity"), where + ".velocity"));
    }
    if (type == "stable") {
        expect_keys(j, {"type", "alpha", "scale", "drift", "half_width", "horizon"}, where);
        return with_common(
            LevyModel::symmetric_stable(j.at("alpha").get<double>(), j.value("scale", 1.0)));
    }
    if (type == "compound-poisson") {
        expect_keys(j, {"type", "rate", "jump", "drift", "half_width", "horizon"}, where);
        return with_common(LevyModel::compound_poisson(j.at("rate").get<double>(),
                                                       parse_jump(j.at("jump"), where + ".jump")));
    }
    if (type == "gamma") {
        expect_keys(j, {"type", "shape", "rate", "drift", "half_width", "horizon"}, where);
        return with_common(LevyModel::gamma_subordinator(j.at("shape").get<double>(),
                                                         j.at("rate").get<double>()));
    }
    if (type == "product") {
        expect_keys(j, {"type", "parts", "drift", "half_width", "horizon"}, where);
        const Json& parts = j.at("parts");
        if (!parts.is_array() || parts.size() < 2) bad(where + ".parts needs >= 2 entries");
        std::vector<LevyModel> models;
        for (std::size_t i = 0; i < parts.size(); ++i)
            models.push_back(
                parse_levy_ref(parts[i], partial, where + ".parts[" + std::to_string(i) + "]"));
        return with_common(LevyModel::product(models, "product"));
    }
    bad(where + ": unknown model type '" + type + "'");
}

paths::CoeffField parse_field(const Json& j, const std::string& where) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "linear-1d") return paths::CoeffField::linear_1d();
        if (name == "projection-12-of-3") return paths::CoeffField::projection_12_of_3();
        bad(where + ": unknown coefficient field '" + name + "'");
    }
    expect_object(j, where);
    const std::string type = j.value("type", std::string());
    if (type == "sin") {
        expect_keys(j, {"type", "amplitude", "offset"}, where);
        return paths::CoeffField::bounded_sin_1d(j.at("amplitude").get<double>(),
                                                 j.at("offset").get<double>());
    }
    if (type == "constant") {
        expect_keys(j, {"type", "matrix"}, where);
        const Json& m = j.at("matrix");
        if (!m.is_array() || m.empty()) bad(where + ".matrix must be an array of rows");
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < m.size(); ++i)
            rows.push_back(parse_vector(m[i], where + ".matrix[" + std::to_string(i) + "]"));
        return paths::CoeffField::constant(Mat::from_rows(rows), "constant");
    }
    bad(where + ": unknown coefficient field type '" + type + "'");
}

ModelEntry parse_model(const std::string& name, const Json& j, const Config& partial) {
    const std::string where = "models." + name;
    expect_object(j, where);
    const std::string type = j.value("type", std::string());
    const double half_width = j.value("half_width", 2.0);
    const double horizon = j.value("horizon", 1.0);
    if (horizon <= 0.0) bad(where + ".horizon must be positive");
    if (half_width <= 0.0) bad(where + ".half_width must be positive");
    if (type == "sde") {
        expect_keys(j, {"type", "field", "driver", "x0", "half_width", "horizon"}, where);
        auto field = parse_field(j.at("field"), where + ".field");
        auto driver = parse_levy_ref(j.at("driver"), partial, where + ".driver");
        Vec x0 = j.contains("x0") ? parse_vector(j.at("x0"), where + ".x0")
                                  : Vec(field.state_dim, 0.0);
        return sde_entry(name, paths::SdeModel(std::move(field), std::move(driver), std::move(x0), name),
                         half_width, horizon);
    }
    if (type == "stable-like") {
        expect_keys(j, {"type", "base", "amplitude", "x0", "half_width", "horizon"}, where);
        auto field = paths::StableLikeField::sin_modulated(j.at("base").get<double>(),
                                                           j.at("amplitude").get<double>());
        return stable_like_entry(name, std::move(field), j.value("x0", 0.0), half_width, horizon);
    }
    return levy_entry(name, parse_levy(j, partial, where), half_width, horizon);
}

void add_builtins(Config& cfg) {
    cfg.models.emplace("bm", levy_entry("bm", LevyModel::brownian(), 2.0, 1.0));
    cfg.models.emplace("stable-1.2", levy_entry("stable-1.2", LevyModel::symmetric_stable(1.2),
                                                2.0, 1.0));
    // Normal jumps keep the (bounded) symbol monotone in |xi|, so the growth fit
    // cleanly reports index zero; a lattice jump law would oscillate forever.
    cfg.models.emplace(
        "cp", levy_entry("cp", LevyModel::compound_poisson(1.0, JumpDist(levy::NormalJump{0.0, 1.0})),
                         2.0, 1.0));

    paths::SdeModel gbm(paths::CoeffField::linear_1d(), LevyModel::brownian(), Vec{1.0}, "gbm");
    cfg.models.emplace("gbm", sde_entry("gbm", std::move(gbm), 2.0, 1.0));

    ModelEntry pbm("poisson-bm", "symbol", symbols::poisson_bm_symbol(1.0),
                   Box::centered(Vec{0.0, 0.0}, 2.0));
    cfg.models.emplace("poisson-bm", std::move(pbm));

    cfg.models.emplace("stablelike",
                       stable_like_entry("stablelike",
                                         paths::StableLikeField::sin_modulated(0.3, 0.2), 0.0,
                                         3.0, 1.0));
}

}  // namespace

const ModelEntry& Config::at(const std::string& name) const {
    const auto it = models.find(name);
    if (it != models.end()) return it->second;
    std::ostringstream os;
    os << "unknown model '" << name << "'; registered:";
    for (const auto& [key, entry] : models) {
        (void)entry;
        os << ' ' << key;
    }
    throw std::invalid_argument(os.str());
}

Config Config::defaults() {
    Config cfg;
    add_builtins(cfg);
    return cfg;
}

Config Config::from_json(const Json& doc) {
    expect_object(doc, "config");
    expect_keys(doc, {"seed", "out_dir", "grid", "thresholds", "models"}, "config");
    Config cfg = defaults();
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_unsigned()) bad("seed must be a nonnegative integer");
        cfg.seed = doc.at("seed").get<std::uint64_t>();
    }
    if (doc.contains("out_dir")) {
        if (!doc.at("out_dir").is_string()) bad("out_dir must be a string");
        cfg.out_dir = doc.at("out_dir").get<std::string>();
    }
    if (doc.contains("grid")) {
        const Json& g = doc.at("grid");
        expect_object(g, "grid");
        expect_keys(g, {"directions", "radii", "x_points"}, "grid");
        cfg.grid.directions = g.value("directions", cfg.grid.directions);
        cfg.grid.radii = g.value("radii", cfg.grid.radii);
        cfg.grid.x_points = g.value("x_points", cfg.grid.x_points);
        if (cfg.grid.directions < 1 || cfg.grid.radii < 1 || cfg.grid.x_points < 2)
            bad("grid resolutions out of range");
    }
    if (doc.contains("thresholds")) {
        const Json& t = doc.at("thresholds");
        expect_object(t, "thresholds");
        expect_keys(t, {"finite_eps", "infinite_eps"}, "thresholds");
        cfg.thresholds.finite_eps = t.value("finite_eps", cfg.thresholds.finite_eps);
        cfg.thresholds.infinite_eps = t.value("infinite_eps", cfg.thresholds.infinite_eps);
        if (cfg.thresholds.finite_eps <= 0.0 ||
            cfg.thresholds.infinite_eps < cfg.thresholds.finite_eps)
            bad("thresholds must satisfy 0 < finite_eps <= infinite_eps");
    }
    if (doc.contains("models")) {
        const Json& models = doc.at("models");
        expect_object(models, "models");
        for (const auto& [name, spec] : models.items()) {
            if (name.empty()) bad("model names must be non-empty");
            auto entry = parse_model(name, spec, cfg);
            cfg.models.insert_or_assign(name, std::move(entry));
        }
    }
    return cfg;
}

Config Config::from_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config file: " + path.string());
    Json doc;
    try {
        doc = Json::parse(is);
    } catch (const Json::exception& e) {
        throw std::invalid_argument("config: " + path.string() + ": " + e.what());
    }
    return from_json(doc);
}

}  // namespace levyvar::config
