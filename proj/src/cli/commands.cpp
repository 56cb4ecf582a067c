#include "levyvar/cli/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "levyvar/core/format.hpp"
#include "levyvar/core/rng.hpp"
#include "levyvar/harness/experiment.hpp"
#include "levyvar/pvar/pvar.hpp"
#include "levyvar/symbols/indices.hpp"

namespace levyvar::cli {

namespace fs = std::filesystem;

namespace {

double parse_number(const std::string& field, const std::string& csv) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse '" + csv + "' as a number list");
    }
    if (used != field.size())
        throw std::invalid_argument("cannot parse '" + csv + "' as a number list");
    return v;
}

std::vector<std::string> split_fields(const std::string& csv) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(csv);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.empty() || csv.empty() || csv.back() == ',')
        throw std::invalid_argument("empty field in list '" + csv + "'");
    return fields;
}

const char* kind_name(symbols::StateSymbol::Kind k) {
    switch (k) {
        case symbols::StateSymbol::Kind::from_triplet: return "state-triplet";
        case symbols::StateSymbol::Kind::from_sde: return "sde";
        case symbols::StateSymbol::Kind::closed_form: return "closed-form";
    }
    return "unknown";
}

Vec point_arg(const std::string& raw, std::size_t dim, const std::string& flag) {
    if (raw.empty()) return Vec(dim, 0.0);
    Vec v = parse_vec_arg(raw);
    if (v.size() != dim)
        throw std::invalid_argument(flag + " must have " + std::to_string(dim) +
                                    " coordinate(s), got " + std::to_string(v.size()));
    return v;
}

std::ofstream open_out(const fs::path& path, bool binary) {
    std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    return os;
}

harness::Json parse_overrides(const std::vector<std::string>& pairs) {
    harness::Json overrides = harness::Json::object();
    for (const std::string& s : pairs) {
        const auto pos = s.find('=');
        if (pos == std::string::npos || pos == 0)
            throw std::invalid_argument("override must look like key=value: '" + s + "'");
        const std::string key = s.substr(0, pos);
        const std::string raw = s.substr(pos + 1);
        harness::Json value = harness::Json::parse(raw, nullptr, false);
        if (value.is_discarded()) value = raw;  // unquoted strings pass through
        overrides[key] = value;
    }
    return overrides;
}

std::string verdict_word(harness::RunVerdict v) {
    switch (v) {
        case harness::RunVerdict::pass: return "PASS";
        case harness::RunVerdict::fail: return "FAIL";
        case harness::RunVerdict::inconclusive: return "INCONCLUSIVE";
    }
    return "FAIL";
}

int report_experiment(const harness::ExperimentReport& report, const fs::path& out_dir,
                      std::ostream& os) {
    os << verdict_word(report.verdict) << ' ' << report.id << " ("
       << fmt_sig(report.runtime_seconds, 3) << "s) -> "
       << (out_dir / report.id / "report.json").string() << '\n';
    return report.verdict == harness::RunVerdict::pass ? 0 : 4;
}

}  // namespace

Vec parse_vec_arg(const std::string& csv) {
    Vec v;
    for (const std::string& field : split_fields(csv)) v.push_back(parse_number(field, csv));
    return v;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> v;
    for (const std::string& field : split_fields(csv)) {
        const double x = parse_number(field, csv);
        const int i = static_cast<int>(x);
        if (static_cast<double>(i) != x)
            throw std::invalid_argument("expected integers in '" + csv + "'");
        v.push_back(i);
    }
    return v;
}

void run_symbol(const config::Config& cfg, const SymbolArgs& args, std::ostream& os) {
    const auto& entry = cfg.at(args.model);
    const std::size_t dim = entry.symbol.dim();
    const Vec x = point_arg(args.x, dim, "--x");
    const Vec xi = point_arg(args.xi, dim, "--xi");
    const auto q = symbols::eval_symbol(entry.symbol, x, xi);
    const double im = q.imag();
    os << fmt_sig(q.real()) << (im < 0 ? " - " : " + ") << fmt_sig(std::abs(im)) << "i\n";
    os << "# model=" << entry.name << " symbol=" << entry.symbol.label()
       << " kind=" << kind_name(entry.symbol.kind()) << " dim=" << dim << '\n';
}

void run_index(const config::Config& cfg, const IndexArgs& args, std::ostream& os) {
    const auto& entry = cfg.at(args.model);
    symbols::IndexEstimate est;
    if (args.kind == "beta1" || args.kind == "beta2") {
        if (!entry.levy)
            throw std::invalid_argument("kind '" + args.kind +
                                        "' needs a Levy model, and '" + entry.name +
                                        "' does not have one");
        const auto ci = levy::classical_indices(*entry.levy, false);
        est.value = args.kind == "beta1" ? ci.beta1 : ci.beta2;
        est.slope = est.value;
    } else if (args.kind == "spot" || args.kind == "loc") {
        if (args.at.empty())
            throw std::invalid_argument("kind '" + args.kind + "' requires --at");
        const Vec x = point_arg(args.at, entry.symbol.dim(), "--at");
        est = args.kind == "spot" ? symbols::index_spot(entry.symbol, x, cfg.grid)
                                  : symbols::index_beta_loc(entry.symbol, x, cfg.grid);
    } else if (args.kind == "unif") {
        est = symbols::index_beta_inf_unif(entry.symbol, entry.domain, cfg.grid);
    } else {
        throw std::invalid_argument("unknown index kind '" + args.kind +
                                    "' (expected beta1, beta2, spot, loc or unif)");
    }
    os << "model,kind,estimate,slope,residual,unbounded\n"
       << symbols::index_csv_row(entry.name, args.kind, est) << '\n';
}

void run_simulate(const config::Config& cfg, const SimulateArgs& args, std::ostream& os) {
    const auto& entry = cfg.at(args.model);
    if (!entry.simulate)
        throw std::invalid_argument("model '" + entry.name + "' has no path sampler");
    if (args.paths < 1) throw std::invalid_argument("--paths must be positive");
    const bool binary = args.format == "bin";
    if (!binary && args.format != "csv")
        throw std::invalid_argument("unknown format '" + args.format + "' (expected csv or bin)");

    paths::GridSpec grid;
    grid.horizon = args.horizon > 0.0 ? args.horizon : entry.horizon;
    grid.level = args.level;
    grid.validate();

    const fs::path dir = cfg.out_dir / "simulate" / entry.name;
    fs::create_directories(dir);
    std::size_t truncated = 0;
    for (int k = 0; k < args.paths; ++k) {
        const auto seed = derive_seed(cfg.seed, "simulate:" + entry.name,
                                      static_cast<std::uint64_t>(k));
        const auto path = entry.simulate(grid, seed);
        if (path.status == paths::PathStatus::truncated) ++truncated;
        char name[32];
        std::snprintf(name, sizeof name, "path_%03d.%s", k, binary ? "bin" : "csv");
        auto file = open_out(dir / name, binary);
        binary ? paths::write_binary(path, file) : paths::write_csv(path, file);
        if (!file) throw std::runtime_error("failed writing " + (dir / name).string());
    }
    os << "wrote " << args.paths << " path(s) at level " << grid.level << " to " << dir.string();
    if (truncated > 0) os << " (" << truncated << " truncated)";
    os << '\n';
}

void run_pvar(const config::Config& cfg, const PvarArgs& args, int workers, std::ostream& os) {
    if (args.p.empty()) throw std::invalid_argument("at least one --p value is required");
    if (args.input.empty() == args.model.empty())
        throw std::invalid_argument("pvar needs exactly one of --input or --model");

    if (!args.input.empty()) {
        std::ifstream is(args.input);
        if (!is) throw std::runtime_error("cannot open " + args.input);
        const auto path = paths::read_csv(is);
        std::vector<double> coord;
        pvar::SeqView seq{path.values, path.dim};
        if (args.coordinate >= 0) {
            coord = path.coordinate(static_cast<std::size_t>(args.coordinate));
            seq = pvar::SeqView{coord, 1};
        }
        os << "p,value\n";
        for (const double p : args.p)
            os << fmt_sig(p) << ',' << fmt_sig(pvar::pvar_exact(seq, p).value) << '\n';
        return;
    }

    const auto& entry = cfg.at(args.model);
    if (!entry.refinable)
        throw std::invalid_argument("model '" + entry.name +
                                    "' does not refine across dyadic levels");
    if (args.paths < 1) throw std::invalid_argument("--paths must be positive");
    const auto levels = parse_int_list(args.levels);
    if (levels.empty()) throw std::invalid_argument("--levels must not be empty");
    const int finest = levels.back();
    const auto make = entry.refinable;
    const paths::RefinableFactory factory = [make, finest](std::uint64_t seed) {
        return make(finest, seed);
    };
    std::optional<std::size_t> coordinate;
    if (args.coordinate >= 0) coordinate = static_cast<std::size_t>(args.coordinate);
    const auto report = pvar::variation_index_estimate(
        factory, levels, args.p, static_cast<std::size_t>(args.paths),
        derive_seed(cfg.seed, "pvar:" + entry.name), coordinate, cfg.thresholds, workers);

    const fs::path dir = cfg.out_dir / "pvar" / entry.name;
    fs::create_directories(dir);
    auto file = open_out(dir / "variation.csv", false);
    file << report.csv();
    if (!file) throw std::runtime_error("failed writing " + (dir / "variation.csv").string());

    for (const auto& row : report.rows)
        os << "p=" << fmt_sig(row.p) << " verdict=" << pvar::to_string(row.verdict)
           << " ratio=" << fmt_sig(row.ratio) << '\n';
    os << "v_hat=" << fmt_sig(report.v_hat) << " boundary=" << (report.boundary ? 1 : 0)
       << " dropped=" << report.dropped_paths << " -> " << (dir / "variation.csv").string()
       << '\n';
}

int run_experiment_cmd(const config::Config& cfg, const ExperimentArgs& args, int workers,
                       std::ostream& os) {
    harness::RunCtx ctx;
    ctx.seed = cfg.seed;
    ctx.out_dir = cfg.out_dir;
    ctx.workers = workers;
    ctx.overrides = parse_overrides(args.overrides);
    const auto report = harness::run_experiment(args.id, ctx);
    return report_experiment(report, cfg.out_dir, os);
}

int run_suite_cmd(const config::Config& cfg, int workers, std::ostream& os) {
    harness::RunCtx ctx;
    ctx.seed = cfg.seed;
    ctx.out_dir = cfg.out_dir;
    ctx.workers = workers;
    std::size_t passed = 0;
    const auto& suite = harness::builtin_suite();
    for (const auto& exp : suite) {
        const auto report = harness::run_experiment(exp.id, ctx);
        if (report_experiment(report, cfg.out_dir, os) == 0) ++passed;
    }
    os << "passed " << passed << "/" << suite.size() << '\n';
    return passed == suite.size() ? 0 : 4;
}

}  // namespace levyvar::cli
