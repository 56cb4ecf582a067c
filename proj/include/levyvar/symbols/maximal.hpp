#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "levyvar/core/grid.hpp"
#include "levyvar/symbols/state_symbol.hpp"

namespace levyvar::symbols {

struct HDiagnostics {
    std::size_t evaluations = 0;
    std::size_t skipped_nonfinite = 0;
    bool outside_domain_hint = false;
    std::vector<std::string> warnings;
};

// Grid maximum of |q(y, eps/R)| over y in the closed ball B_{2R}(x) and eps in the
// closed unit ball. A lower bound of the true sup, converging under grid refinement.
double H_local(const StateSymbol& sym, std::span<const double> x, double R, const GridCfg& cfg,
               HDiagnostics* diag = nullptr);

struct HUniformResult {
    double value = 0.0;       // sup over the requested domain
    bool unbounded = false;   // doubling probe detected unbounded growth in x
    std::vector<double> box_sups;  // sups over the doubling box sequence
};

// Sup of H_local over a compact box, with an unboundedness probe: the sup is re-taken
// over a doubling sequence of boxes, and growth by a factor >= 2 across each of the
// last two doublings sets the flag.
HUniformResult H_uniform(const StateSymbol& sym, double R, const Box& domain, const GridCfg& cfg,
                         HDiagnostics* diag = nullptr, int doublings = 4);

}  // namespace levyvar::symbols
