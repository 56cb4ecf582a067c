#pragma once

#include <cstdint>
#include <vector>

namespace levyvar::paths {

/// Cantor function c(t) for rational t = num/den in [0, 1], by exact ternary
/// digit extraction with integer arithmetic.
double cantor_function(std::int64_t num, std::int64_t den);

struct CantorRow {
    int n = 0;
    double f_value = 0.0;   // f(3^-n) with f(t) = (c(t) + t) / 2
    double quotient = 0.0;  // sin(f(3^-n)) / 3^-n
};

/// Imaginary-part quotient of the Cantor-clock process along t_n = 3^{-n}. The
/// quotient equals sin(f(t_n)) * 3^n and grows like (3/2)^n; successive ratios
/// approach 3/2.
std::vector<CantorRow> cantor_divergence(int n_max);

}  // namespace levyvar::paths
