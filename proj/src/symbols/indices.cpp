#include "levyvar/symbols/indices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "levyvar/core/format.hpp"
#include "levyvar/core/stats.hpp"

namespace levyvar::symbols {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

IndexEstimate index_from_growth(std::span<const std::pair<double, double>> samples,
                                GrowthMode mode) {
    if (samples.size() < 4)
        throw std::invalid_argument("index extraction needs at least 4 scale samples");
    IndexEstimate out;
    out.grid.assign(samples.begin(), samples.end());
    for (const auto& [s, v] : samples) {
        if (!(s > 0.0)) throw std::invalid_argument("scales must be positive");
        if (!std::isfinite(v)) {
            out.unbounded = true;
            out.value = kInf;
            return out;
        }
    }

    std::vector<std::pair<double, double>> pts(samples.begin(), samples.end());
    std::erase_if(pts, [](const auto& p) { return !(p.second > 0.0); });
    if (pts.size() < 2) return out;  // flat-zero data: index 0

    // Tail half nearest the limit: small scales for at_zero, large for at_infinity.
    std::sort(pts.begin(), pts.end());
    const std::size_t m = (pts.size() + 1) / 2;
    const std::size_t lo = mode == GrowthMode::at_zero ? 0 : pts.size() - m;
    Vec xs, ys;
    for (std::size_t i = lo; i < lo + m; ++i) {
        const double ls = std::log(pts[i].first);
        xs.push_back(mode == GrowthMode::at_zero ? -ls : ls);
        ys.push_back(std::log(pts[i].second));
    }
    const LineFit fit = fit_line(xs, ys);
    out.slope = fit.slope;
    out.rms_residual = fit.rms_residual;
    out.value = std::max(0.0, fit.slope);
    return out;
}

IndexEstimate index_spot(const StateSymbol& sym, std::span<const double> y, const GridCfg& cfg) {
    if (y.size() != sym.dim()) throw std::invalid_argument("spot index dimension mismatch");
    const auto dirs = unit_directions(sym.dim(), cfg.directions);
    std::vector<std::pair<double, double>> samples;
    for (int k = 4; k <= 16; ++k) {
        const double r = std::ldexp(1.0, k);
        double best = 0.0;
        for (const auto& u : dirs) {
            Vec xi(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) xi[i] = r * u[i];
            best = std::max(best, sym(y, xi).real());
        }
        samples.emplace_back(r, best);
    }
    return index_from_growth(samples, GrowthMode::at_infinity);
}

IndexEstimate index_beta_loc(const StateSymbol& sym, std::span<const double> x, const GridCfg& cfg,
                             double r0) {
    if (!(r0 > 0.0)) throw std::invalid_argument("beta_loc needs a positive base radius");
    const Vec center(x.begin(), x.end());
    const auto pts = ball_grid(center, r0, cfg);
    std::vector<double> spot(pts.size());
    std::vector<double> dist(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        spot[i] = index_spot(sym, pts[i], cfg).value;
        dist[i] = norm2(axpy(-1.0, center, pts[i]));
    }

    IndexEstimate out;
    for (int j = 0; j <= 5; ++j) {
        const double r = r0 * std::ldexp(1.0, -j);
        double inf = kInf;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (dist[i] <= r * (1.0 + 1e-12)) inf = std::min(inf, spot[i]);
        out.trace.push_back(inf);  // the center is always on the grid, so inf is finite
        out.grid.emplace_back(r, inf);
    }
    for (std::size_t j = 1; j < out.trace.size(); ++j)
        if (out.trace[j] + 0.02 < out.trace[j - 1])
            throw std::logic_error("beta_loc infima decreased along shrinking balls");
    out.value = out.trace.back();
    return out;
}

IndexEstimate index_beta_inf_unif(const StateSymbol& sym, const Box& domain, const GridCfg& cfg) {
    std::vector<std::pair<double, double>> samples;
    std::size_t flagged = 0;
    for (int k = 4; k <= 16; ++k) {
        const double r = std::ldexp(1.0, -k);
        const HUniformResult h = H_uniform(sym, r, domain, cfg);
        if (h.unbounded) ++flagged;
        samples.emplace_back(r, h.value);
    }
    if (flagged == samples.size()) {
        IndexEstimate out;
        out.grid = std::move(samples);
        out.unbounded = true;
        out.value = kInf;
        return out;
    }
    return index_from_growth(samples, GrowthMode::at_zero);
}

IndexEstimate index_beta_inf_unif1(const StateSymbol& sym, const Box& domain, const GridCfg& cfg) {
    IndexEstimate best;
    double best_value = -1.0;
    for (const auto& x : box_grid(domain, cfg)) {
        std::vector<std::pair<double, double>> samples;
        for (int k = 4; k <= 16; ++k) {
            const double r = std::ldexp(1.0, -k);
            samples.emplace_back(r, H_local(sym, x, r, cfg));
        }
        IndexEstimate e = index_from_growth(samples, GrowthMode::at_zero);
        if (e.unbounded) return e;
        if (e.value > best_value) {
            best_value = e.value;
            best = std::move(e);
        }
    }
    return best;
}

std::string index_csv_row(const std::string& model, const std::string& kind,
                          const IndexEstimate& e) {
    return csv_record({model, kind, fmt_sig(e.value), fmt_sig(e.slope), fmt_sig(e.rms_residual),
                       e.unbounded ? "1" : "0"});
}

}  // namespace levyvar::symbols
