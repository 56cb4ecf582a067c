#include "levyvar/paths/cantor.hpp"

#include <cmath>
#include <stdexcept>

namespace levyvar::paths {

double cantor_function(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0 || num > den) throw std::invalid_argument("need t = num/den in [0, 1]");
    if (num == den) return 1.0;
    // Ternary digits of t; digits map 0 -> bit 0, 2 -> bit 1, and the first 1
    // terminates with bit 1 (value constant on the removed middle intervals).
    double c = 0.0;
    double bit = 0.5;
    for (int i = 0; i < 64 && num != 0; ++i) {
        num *= 3;
        const std::int64_t digit = num / den;
        num -= digit * den;
        if (digit == 1) {
            c += bit;
            break;
        }
        if (digit == 2) c += bit;
        bit *= 0.5;
    }
    return c;
}

std::vector<CantorRow> cantor_divergence(int n_max) {
    if (n_max < 1 || n_max > 30)
        throw std::invalid_argument("cantor table needs n_max in [1, 30] for ternary exactness");
    std::vector<CantorRow> rows;
    std::int64_t den = 1;
    double scale = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        den *= 3;
        scale *= 3.0;
        const double t = 1.0 / scale;
        const double f = 0.5 * (cantor_function(1, den) + t);
        rows.push_back({n, f, std::sin(f) * scale});
    }
    return rows;
}

}  // namespace levyvar::paths
