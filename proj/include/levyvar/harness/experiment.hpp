#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace levyvar::harness {

using Json = nlohmann::ordered_json;

enum class RunVerdict { pass, fail, inconclusive };

const char* to_string(RunVerdict v);

/// How an experiment is invoked: master seed, artifact root, worker count and
/// parameter overrides (validated against the experiment's defaults).
struct RunCtx {
    std::optional<std::uint64_t> seed;  // unset: use the experiment default
    std::filesystem::path out_dir = "out";
    int workers = 1;
    Json overrides = Json::object();
};

/// Resolved invocation handed to an experiment body. `dir` exists and is the
/// per-experiment artifact directory.
struct BodyCtx {
    std::uint64_t seed = 0;
    int workers = 1;
    std::filesystem::path dir;
};

struct ExperimentReport {
    std::string id;
    std::string claim;
    Json inputs = Json::object();   // resolved parameters, seed, workers
    Json metrics = Json::object();  // bit-reproducible under a fixed seed
    RunVerdict verdict = RunVerdict::inconclusive;
    double runtime_seconds = 0.0;   // wall time; excluded from reproducibility
    std::uint64_t seed = 0;

    Json to_json() const;
};

/// One registered check: a claim in words, tunable defaults, and a body that
/// fills metrics and sets the verdict. Replica seeds are derived inside bodies
/// as derive_seed(master, id, replica), so experiments never share streams.
struct Experiment {
    std::string id;
    std::string claim;
    Json defaults = Json::object();
    std::uint64_t seed = 2026;  // default master seed
    std::function<void(const Json& params, const BodyCtx& ctx, ExperimentReport& out)> body;
};

const std::vector<Experiment>& builtin_suite();
const Experiment& find_experiment(const std::string& id);

/// Runs one experiment: merges overrides onto the defaults (unknown keys are
/// rejected), executes the body, then writes <out>/<id>/report.json and
/// <out>/<id>/metrics.csv. Two runs with the same seed produce bit-identical
/// metrics for any worker count.
ExperimentReport run_experiment(const std::string& id, const RunCtx& ctx);

}  // namespace levyvar::harness
