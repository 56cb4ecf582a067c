#pragma once

#include <span>
#include <string>

#include "levyvar/symbols/state_symbol.hpp"

namespace levyvar::symbols {

struct DIntegralResult {
    double value = 0.0;   // +infinity when the integral diverges
    bool diverges = false;
};

// The divergence functional D(x) = integral of (1 - e^{-||y||^lambda}) against the
// jump measure N(x, dy), plus tr Q(x) when lambda = 2. Closed forms for atomic and
// compound Poisson components; shell quadrature with analytic small-y and tail pieces
// for stable components. A stable component with lambda <= alpha is divergent: the
// shell lower bounds are accumulated until they exceed `cap`.
DIntegralResult d_integral(const StateTriplet& triplet, std::span<const double> x, double lambda,
                           double cap = 1e6);

}  // namespace levyvar::symbols
