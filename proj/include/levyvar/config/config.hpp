#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "levyvar/core/grid.hpp"
#include "levyvar/levy/model.hpp"
#include "levyvar/paths/refinable.hpp"
#include "levyvar/pvar/variation_index.hpp"
#include "levyvar/symbols/state_symbol.hpp"

namespace levyvar::config {

using Json = nlohmann::ordered_json;

/// A registered model resolved into every representation the commands can ask
/// for. Parts a construction does not provide stay empty: closed-form symbols
/// have no sampler, SDE entries no classical-index model, and only Levy and
/// stable-like entries refine across dyadic levels.
struct ModelEntry {
    ModelEntry(std::string name_, std::string kind_, symbols::StateSymbol symbol_, Box domain_)
        : name(std::move(name_)),
          kind(std::move(kind_)),
          symbol(std::move(symbol_)),
          domain(std::move(domain_)) {}

    std::string name;
    std::string kind;  // "levy", "sde", "stable-like" or "symbol"
    symbols::StateSymbol symbol;
    std::optional<levy::LevyModel> levy;
    std::function<paths::SamplePath(const paths::GridSpec&, std::uint64_t)> simulate;
    std::function<std::unique_ptr<paths::RefinablePath>(int finest, std::uint64_t seed)> refinable;
    Box domain;            // state box for the uniform index kinds
    double horizon = 1.0;  // default simulation horizon
};

/// Runtime configuration. The JSON schema accepts exactly these keys:
///
///   seed        master seed (default 2026)
///   out_dir     artifact directory (default "out")
///   grid        {"directions", "radii", "x_points"}; defaults 64 / 32 / 65
///   thresholds  {"finite_eps", "infinite_eps"}; defaults 0.1 / 0.2
///   models      name -> model spec, added on top of the built-in registry
///
/// Model specs are tagged by "type":
///
///   {"type": "brownian", "dim": 1, "variance": 1.0}
///   {"type": "drift", "velocity": [..]}
///   {"type": "stable", "alpha": a, "scale": 1.0}
///   {"type": "compound-poisson", "rate": r, "jump": {"dist": "constant" | "normal" |
///        "exponential" | "uniform", ...parameters}}
///   {"type": "gamma", "shape": k, "rate": r}
///   {"type": "product", "parts": [spec-or-registered-name, ...]}
///   {"type": "sde", "field": "linear-1d" | "projection-12-of-3" |
///        {"type": "sin", "amplitude": a, "offset": b} |
///        {"type": "constant", "matrix": [[..], ..]}, "driver": spec-or-name, "x0": [..]}
///   {"type": "stable-like", "base": b, "amplitude": a, "x0": 0.0}
///
/// Levy specs additionally accept "drift": [..]; every spec accepts
/// "half_width" (index domain, default 2.0) and "horizon" (default 1.0).
/// Unknown keys are rejected at every level.
struct Config {
    std::map<std::string, ModelEntry> models;
    GridCfg grid;
    pvar::VarIndexThresholds thresholds;
    std::filesystem::path out_dir = "out";
    std::uint64_t seed = 2026;

    const ModelEntry& at(const std::string& name) const;  // invalid_argument when missing

    static Config defaults();  // built-in registry only
    static Config from_json(const Json& doc);
    static Config from_file(const std::filesystem::path& path);
};

}  // namespace levyvar::config
