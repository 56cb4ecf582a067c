#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "levyvar/symbols/maximal.hpp"
#include "levyvar/symbols/state_symbol.hpp"

namespace levyvar::symbols {

enum class GrowthMode { at_zero, at_infinity };

struct IndexEstimate {
    double value = 0.0;       // nonnegative; +infinity when unbounded
    bool unbounded = false;
    double slope = 0.0;       // tail least-squares slope before clamping
    double rms_residual = 0.0;
    std::vector<std::pair<double, double>> grid;  // (scale, functional value)
    std::vector<double> trace;  // auxiliary sequence (e.g. the beta_loc infima over R)
};

// Power-growth exponent from (scale, value) samples: least-squares slope of log value
// against -log scale (at_zero) or log scale (at_infinity) over the tail half of the
// samples closest to the limit, clamped to >= 0.
IndexEstimate index_from_growth(std::span<const std::pair<double, double>> samples,
                                GrowthMode mode);

// Growth of max-over-directions Re q(y, r u) over the radius grid r = 2^4 .. 2^16.
IndexEstimate index_spot(const StateSymbol& sym, std::span<const double> y, const GridCfg& cfg);

// sup_R inf_{y in B_R(x)} spot index, via nested ball grids over a shrinking R
// sequence; the recorded infima must be nondecreasing as R decreases.
IndexEstimate index_beta_loc(const StateSymbol& sym, std::span<const double> x,
                             const GridCfg& cfg, double r0 = 1.0);

// Growth of the uniform maximal functional H(R) over R = 2^-4 .. 2^-16; the +infinity
// sentinel is returned when the doubling probe flags unboundedness at every R.
IndexEstimate index_beta_inf_unif(const StateSymbol& sym, const Box& domain, const GridCfg& cfg);

// sup over the domain grid of the per-state growth of H(x, R).
IndexEstimate index_beta_inf_unif1(const StateSymbol& sym, const Box& domain, const GridCfg& cfg);

// CSV row "model,kind,estimate,slope,residual,unbounded" used by the report writers.
std::string index_csv_row(const std::string& model, const std::string& kind,
                          const IndexEstimate& e);

}  // namespace levyvar::symbols
