#include "levyvar/pvar/variation_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "levyvar/core/format.hpp"
#include "levyvar/core/parallel.hpp"
#include "levyvar/core/rng.hpp"
#include "levyvar/core/stats.hpp"

namespace levyvar::pvar {

namespace {

double path_ratio(double coarse, double fine) {
    if (coarse == 0.0 && fine == 0.0) return 1.0;  // flat at both meshes: stabilized
    if (coarse == 0.0) return std::numeric_limits<double>::infinity();
    return fine / coarse;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::finite: return "finite";
        case Verdict::infinite: return "infinite";
        default: return "inconclusive";
    }
}

VarIndexReport variation_index_estimate(const paths::RefinableFactory& factory,
                                        std::span<const int> levels,
                                        std::span<const double> p_grid, std::size_t n_paths,
                                        std::uint64_t seed, std::optional<std::size_t> coordinate,
                                        const VarIndexThresholds& thresholds, int workers) {
    if (levels.size() < 3) throw std::invalid_argument("need at least 3 dyadic levels");
    if (!std::is_sorted(levels.begin(), levels.end()))
        throw std::invalid_argument("levels must be increasing");
    if (p_grid.empty() || !std::is_sorted(p_grid.begin(), p_grid.end()))
        throw std::invalid_argument("p grid must be nonempty and sorted");
    if (n_paths < 1) throw std::invalid_argument("need at least one path");
    if (!(thresholds.finite_eps >= 0.0) || !(thresholds.infinite_eps >= thresholds.finite_eps))
        throw std::invalid_argument("thresholds must satisfy 0 <= finite_eps <= infinite_eps");

    const std::size_t np = p_grid.size(), nl = levels.size();

    // values[(ip * nl + il)] collects per-path V^p at that level, in replica order.
    struct Acc {
        std::vector<std::vector<double>> values;
        std::size_t dropped = 0;
    };
    const Acc acc = chunked_reduce<Acc>(
        n_paths, workers,
        [&] {
            Acc a;
            a.values.resize(np * nl);
            return a;
        },
        [&](Acc& a, std::uint64_t r) {
            std::vector<double> cell(np * nl);
            try {
                const auto path = factory(derive_seed(seed, "var-index", r));
                for (std::size_t il = 0; il < nl; ++il) {
                    const paths::SamplePath sp = path->at_level(levels[il]);
                    Vec coord;
                    SeqView view;
                    if (coordinate) {
                        coord = sp.coordinate(*coordinate);
                        view = SeqView{coord, 1};
                    } else {
                        view = SeqView{sp.values, sp.dim};
                    }
                    for (std::size_t ip = 0; ip < np; ++ip)
                        cell[ip * nl + il] = pvar_exact(view, p_grid[ip]).value;
                }
            } catch (const std::exception&) {
                ++a.dropped;
                return;
            }
            for (std::size_t k = 0; k < cell.size(); ++k) a.values[k].push_back(cell[k]);
        },
        [](Acc& a, const Acc& b) {
            a.dropped += b.dropped;
            for (std::size_t k = 0; k < a.values.size(); ++k)
                a.values[k].insert(a.values[k].end(), b.values[k].begin(), b.values[k].end());
        });

    VarIndexReport report;
    report.levels.assign(levels.begin(), levels.end());
    report.dropped_paths = acc.dropped;
    const std::size_t kept = n_paths - acc.dropped;
    if (kept == 0) throw std::runtime_error("every path was dropped");

    for (std::size_t ip = 0; ip < np; ++ip) {
        VarIndexRow row;
        row.p = p_grid[ip];
        for (std::size_t il = 0; il < nl; ++il) {
            const auto& vals = acc.values[ip * nl + il];
            row.median_values.push_back(median(vals));
            if (il == 0) {
                row.median_ratios.push_back(1.0);
                continue;
            }
            const auto& prev = acc.values[ip * nl + il - 1];
            std::vector<double> ratios(kept);
            for (std::size_t r = 0; r < kept; ++r) ratios[r] = path_ratio(prev[r], vals[r]);
            row.median_ratios.push_back(median(ratios));
        }
        row.ratio = row.median_ratios.back();
        if (row.ratio <= 1.0 + thresholds.finite_eps)
            row.verdict = Verdict::finite;
        else if (row.ratio >= 1.0 + thresholds.infinite_eps)
            row.verdict = Verdict::infinite;
        else
            row.verdict = Verdict::inconclusive;
        report.rows.push_back(std::move(row));
    }

    // Monotone repair: an index separates infinite (small p) from finite (large p)
    // verdicts; any inversion turns the whole overlap into the inconclusive band.
    double p_inf_max = -std::numeric_limits<double>::infinity();
    double p_fin_min = std::numeric_limits<double>::infinity();
    for (const auto& row : report.rows) {
        if (row.verdict == Verdict::infinite) p_inf_max = std::max(p_inf_max, row.p);
        if (row.verdict == Verdict::finite) p_fin_min = std::min(p_fin_min, row.p);
    }
    if (p_fin_min < p_inf_max) {
        for (auto& row : report.rows)
            if (row.p >= p_fin_min && row.p <= p_inf_max) row.verdict = Verdict::inconclusive;
        p_inf_max = -std::numeric_limits<double>::infinity();
        p_fin_min = std::numeric_limits<double>::infinity();
        for (const auto& row : report.rows) {
            if (row.verdict == Verdict::infinite) p_inf_max = std::max(p_inf_max, row.p);
            if (row.verdict == Verdict::finite) p_fin_min = std::min(p_fin_min, row.p);
        }
    }

    const bool has_inf = std::isfinite(p_inf_max), has_fin = std::isfinite(p_fin_min);
    if (has_inf && has_fin) {
        report.v_hat = 0.5 * (p_inf_max + p_fin_min);
    } else if (has_fin) {
        report.v_hat = p_grid.front();  // index at or below the probed range
        report.boundary = true;
    } else if (has_inf) {
        report.v_hat = p_grid.back();  // index at or above the probed range
        report.boundary = true;
    } else {
        report.v_hat = 0.5 * (p_grid.front() + p_grid.back());
        report.boundary = true;
    }
    return report;
}

std::string VarIndexReport::csv() const {
    std::string out = "p,level,median_V,ratio,verdict\n";
    for (const auto& row : rows)
        for (std::size_t il = 0; il < levels.size(); ++il)
            out += csv_record({fmt_sig(row.p), std::to_string(levels[il]),
                               fmt_sig(row.median_values[il]), fmt_sig(row.median_ratios[il]),
                               to_string(row.verdict)});
    return out;
}

}  // namespace levyvar::pvar
