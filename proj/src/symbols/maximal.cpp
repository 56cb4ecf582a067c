#include "levyvar/symbols/maximal.hpp"

#include <cmath>
#include <stdexcept>

namespace levyvar::symbols {

namespace {

bool inside_box(const Box& box, std::span<const double> x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < box.lo[i] || x[i] > box.hi[i]) return false;
    return true;
}

}  // namespace

double H_local(const StateSymbol& sym, std::span<const double> x, double R, const GridCfg& cfg,
               HDiagnostics* diag) {
    if (!(R > 0.0)) throw std::invalid_argument("H_local needs a positive radius");
    if (x.size() != sym.dim()) throw std::invalid_argument("H_local state dimension mismatch");
    const Vec center(x.begin(), x.end());
    const auto ys = ball_grid(center, 2.0 * R, cfg);
    const auto dirs = unit_directions(sym.dim(), cfg.directions);
    double best = 0.0;
    bool skipped = false;
    for (const auto& y : ys) {
        if (diag && sym.domain_hint && !inside_box(*sym.domain_hint, y))
            diag->outside_domain_hint = true;
        for (const auto& u : dirs) {
            for (int k = 1; k <= cfg.radii; ++k) {
                const double scale = (static_cast<double>(k) / cfg.radii) / R;
                Vec xi(u.size());
                for (std::size_t i = 0; i < u.size(); ++i) xi[i] = scale * u[i];
                const Complex q = sym(y, xi);
                if (diag) ++diag->evaluations;
                const double mag = std::abs(q);
                if (!std::isfinite(mag)) {
                    skipped = true;
                    if (diag) ++diag->skipped_nonfinite;
                    continue;
                }
                if (mag > best) best = mag;
            }
        }
    }
    if (skipped && diag)
        diag->warnings.push_back("non-finite symbol values excluded from the maximal functional");
    return best;
}

HUniformResult H_uniform(const StateSymbol& sym, double R, const Box& domain, const GridCfg& cfg,
                         HDiagnostics* diag, int doublings) {
    if (!(R > 0.0)) throw std::invalid_argument("H_uniform needs a positive radius");
    if (domain.dim() != sym.dim()) throw std::invalid_argument("H_uniform domain dimension mismatch");
    if (doublings < 2) throw std::invalid_argument("the unboundedness probe needs >= 2 doublings");

    const auto box_sup = [&](const Box& box) {
        double best = 0.0;
        for (const auto& x : box_grid(box, cfg)) best = std::max(best, H_local(sym, x, R, cfg, diag));
        return best;
    };

    HUniformResult out;
    Box box = domain;
    out.box_sups.push_back(box_sup(box));
    out.value = out.box_sups.front();
    for (int i = 0; i < doublings; ++i) {
        box = box.doubled();
        out.box_sups.push_back(box_sup(box));
    }
    const std::size_t n = out.box_sups.size();
    const double a = out.box_sups[n - 3], b = out.box_sups[n - 2], c = out.box_sups[n - 1];
    out.unbounded = a > 0.0 && b >= 2.0 * a && c >= 2.0 * b;
    return out;
}

}  // namespace levyvar::symbols
