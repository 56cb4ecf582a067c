#include "levyvar/harness/experiment.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>

#include "levyvar/core/format.hpp"

namespace levyvar::harness {

const char* to_string(RunVerdict v) {
    switch (v) {
        case RunVerdict::pass: return "pass";
        case RunVerdict::fail: return "fail";
        default: return "inconclusive";
    }
}

Json ExperimentReport::to_json() const {
    Json j;
    j["id"] = id;
    j["claim"] = claim;
    j["inputs"] = inputs;
    j["metrics"] = metrics;
    j["verdict"] = to_string(verdict);
    j["runtime_seconds"] = runtime_seconds;
    j["seed"] = seed;
    return j;
}

const Experiment& find_experiment(const std::string& id) {
    for (const auto& e : builtin_suite())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown experiment id: " + id);
}

namespace {

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + p.string());
    os << text;
    if (!os) throw std::runtime_error("write failed: " + p.string());
}

std::string metrics_csv(const Json& metrics) {
    std::string out = csv_record({"metric", "value"});
    for (const auto& [key, value] : metrics.items()) {
        std::string field;
        if (value.is_number_float())
            field = fmt_full(value.get<double>());
        else if (value.is_string())
            field = value.get<std::string>();
        else
            field = value.dump();
        out += csv_record({key, field});
    }
    return out;
}

}  // namespace

ExperimentReport run_experiment(const std::string& id, const RunCtx& ctx) {
    const Experiment& exp = find_experiment(id);
    if (ctx.workers < 1) throw std::invalid_argument("workers must be >= 1");

    Json params = exp.defaults;
    if (!ctx.overrides.is_object()) throw std::invalid_argument("overrides must be an object");
    for (const auto& [key, value] : ctx.overrides.items()) {
        if (!params.contains(key))
            throw std::invalid_argument("unknown override '" + key + "' for experiment " + id);
        params[key] = value;
    }

    BodyCtx body_ctx;
    body_ctx.seed = ctx.seed.value_or(exp.seed);
    body_ctx.workers = ctx.workers;
    body_ctx.dir = ctx.out_dir / id;
    std::filesystem::create_directories(body_ctx.dir);

    ExperimentReport report;
    report.id = id;
    report.claim = exp.claim;
    report.seed = body_ctx.seed;
    report.inputs = Json{{"params", params}, {"seed", body_ctx.seed}, {"workers", ctx.workers}};

    const auto t0 = std::chrono::steady_clock::now();
    exp.body(params, body_ctx, report);
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    write_text(body_ctx.dir / "report.json", report.to_json().dump(2) + "\n");
    write_text(body_ctx.dir / "metrics.csv", metrics_csv(report.metrics));
    return report;
}

}  // namespace levyvar::harness
