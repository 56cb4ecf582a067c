// Acceptance gate: runs registered experiments at their default parameters and
// prints one PASS/FAIL line per criterion with the decisive metrics and the
// pinned tolerance. Usage:
//
//   acceptance_tests           run every experiment, nonzero exit if any fails
//   acceptance_tests <id>      run one experiment, exit 0 on PASS, 1 on FAIL
#include <algorithm>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "levyvar/core/format.hpp"
#include "levyvar/harness/experiment.hpp"

namespace {

using levyvar::fmt_sig;
using levyvar::harness::ExperimentReport;
using levyvar::harness::Json;
using levyvar::harness::RunCtx;
using levyvar::harness::RunVerdict;

// Numbers stored through the JSON non-finite escape come back as strings.
std::string jnum(const Json& j, int sig = 6) {
    return j.is_string() ? j.get<std::string>() : fmt_sig(j.get<double>(), sig);
}

std::string detail(const ExperimentReport& r) {
    const Json& m = r.metrics;
    const Json& p = r.inputs.at("params");
    std::ostringstream os;
    if (r.id == "pvar-oracle") {
        os << "mismatches=" << m.at("mismatches") << "/" << m.at("comparisons")
           << " max_rel_diff=" << jnum(m.at("max_rel_diff")) << " tol=" << jnum(p.at("rel_tol"));
    } else if (r.id == "stable-dichotomy-1.2" || r.id == "bm-index" || r.id == "bns-gvar") {
        for (const Json& row : m.at("rows"))
            os << "p=" << jnum(row.at("p")) << " ratio=" << jnum(row.at("ratio")) << " "
               << row.at("verdict").get<std::string>() << "; ";
        os << "v_hat=" << jnum(m.at("v_hat"));
        if (r.id == "stable-dichotomy-1.2")
            os << " min_infinite_ratio=" << jnum(p.at("min_infinite_ratio"));
        else
            os << " |v_hat-2|=" << jnum(m.at("abs_error")) << " tol=" << jnum(p.at("tolerance"));
    } else if (r.id == "stablelike-index") {
        os << "unif=" << jnum(m.at("beta_inf_unif").at("value")) << " (target 1) loc(0)="
           << jnum(m.at("beta_loc_at_0").at("value")) << " (target 0.6) tol="
           << jnum(p.at("tolerance"));
    } else if (r.id == "gbm-symbol-mc") {
        os << "Re=" << jnum(m.at("estimate_re")) << " err=" << jnum(m.at("abs_error"))
           << " tol=" << jnum(p.at("tolerance")) << " se=" << jnum(m.at("std_error"));
    } else if (r.id == "gbm-indices") {
        os << "spot(1)=" << jnum(m.at("spot_at_1").at("value")) << " spot(0)="
           << jnum(m.at("spot_at_0").at("value")) << " unif="
           << jnum(m.at("beta_inf_unif").at("value")) << " tol=" << jnum(p.at("tolerance"));
    } else if (r.id == "index-sandwich") {
        double worst = 0.0;
        for (const auto& [name, entry] : m.at("models").items()) {
            (void)name;
            const double loc = entry.at("beta_loc").get<double>();
            const double u1 = entry.at("beta_inf_unif1").get<double>();
            const double u = entry.at("beta_inf_unif").get<double>();
            worst = std::max({worst, loc - u1, u1 - u});
        }
        os << "models=" << m.at("models").size() << " worst_order_violation=" << fmt_sig(worst, 6)
           << " tol=" << jnum(p.at("tolerance"));
    } else if (r.id == "sde-transfer") {
        os << "full_rank=" << jnum(m.at("full_rank").at("value")) << " (target "
           << jnum(m.at("driver_beta1")) << ") projection=" << jnum(m.at("projection").at("value"))
           << " (target " << jnum(m.at("expected_projection")) << ") tol="
           << jnum(p.at("tolerance"));
    } else if (r.id == "d-dichotomy") {
        os << "D(" << jnum(p.at("lambda_div")) << ")=" << jnum(m.at("divergent_value")) << " D("
           << jnum(p.at("lambda_conv")) << ") rel_err=" << jnum(m.at("rel_error"))
           << " tol=" << jnum(p.at("rel_tol"));
    } else if (r.id == "h-trend") {
        os << "growth=" << jnum(m.at("growth_ratio")) << " (need >= "
           << jnum(p.at("grow_factor")) << ") flat_ratio=" << jnum(m.at("flat_ratio"))
           << " (band 1/" << jnum(p.at("flat_band")) << ".." << jnum(p.at("flat_band")) << ")";
    } else if (r.id == "cogarch-closedform") {
        os << "max_rel_error=" << jnum(m.at("max_rel_error")) << " tol=" << jnum(p.at("rel_tol"))
           << " max_v1_ratio=" << jnum(m.at("max_v1_ratio")) << " slack="
           << jnum(p.at("v1_slack"));
    } else if (r.id == "gou-gaussian") {
        os << "variance=" << jnum(m.at("variance")) << " target=" << jnum(m.at("target"))
           << " |err|=" << jnum(m.at("abs_error")) << " limit=3se="
           << fmt_sig(3.0 * m.at("std_error").get<double>(), 6);
    } else if (r.id == "cantor-divergence") {
        os << "quotient ratios in [" << jnum(m.at("min_ratio"), 12) << ", "
           << jnum(m.at("max_ratio"), 12) << "] vs pinned band [" << jnum(p.at("band_lo")) << ", "
           << jnum(p.at("band_hi")) << "]";
    } else if (r.id == "determinism") {
        os << "experiments_checked=" << m.at("experiments_checked") << " mismatched="
           << m.at("mismatched").size() << " workers=" << m.at("workers_compared").dump();
    } else {
        os << m.dump();
    }
    return os.str();
}

int run_one(const std::string& id) {
    RunCtx ctx;
    ctx.out_dir = "acceptance-out";
    ctx.workers = 1;
    const ExperimentReport report = levyvar::harness::run_experiment(id, ctx);
    const bool ok = report.verdict == RunVerdict::pass;
    std::cout << (ok ? "PASS " : "FAIL ") << id << ": " << detail(report) << std::endl;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        if (argc > 2) {
            std::cerr << "usage: acceptance_tests [experiment-id]\n";
            return 2;
        }
        if (argc == 2) return run_one(argv[1]);
        int failures = 0;
        for (const auto& exp : levyvar::harness::builtin_suite())
            failures += run_one(exp.id);
        if (failures > 0) std::cout << failures << " criterion(s) failed\n";
        return failures == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
