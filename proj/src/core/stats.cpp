#include "levyvar/core/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levyvar {

double mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean of empty range");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / xs.size();
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) throw std::invalid_argument("variance needs at least 2 samples");
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / (xs.size() - 1);
}

double median(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("median of empty range");
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    return (n % 2 == 1) ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("line fit needs matching ranges of size >= 2");
    const double mx = mean(x);
    const double my = mean(y);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("line fit with degenerate abscissae");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        rss += r * r;
    }
    f.rms_residual = std::sqrt(rss / x.size());
    return f;
}

void OnlineStats::add(double x) {
    ++n_;
    sum_ += x;
    sum_sq_ += x * x;
}

void OnlineStats::merge(const OnlineStats& o) {
    n_ += o.n_;
    sum_ += o.sum_;
    sum_sq_ += o.sum_sq_;
}

double OnlineStats::variance() const {
    if (n_ < 2) throw std::invalid_argument("variance needs at least 2 samples");
    const double m = mean();
    return std::max(0.0, (sum_sq_ - n_ * m * m) / (n_ - 1));
}

}  // namespace levyvar
