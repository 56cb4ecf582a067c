#pragma once

#include <span>
#include <vector>

namespace levyvar {

double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs);  // unbiased, n-1 denominator
double median(std::vector<double> xs);               // by value: sorts a copy

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

// Ordinary least squares y ~ slope * x + intercept. Needs >= 2 points.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Streaming accumulator with a deterministic merge, so chunked parallel reductions
// combine in fixed order regardless of thread count.
class OnlineStats {
public:
    void add(double x);
    void merge(const OnlineStats& o);
    long long count() const { return n_; }
    double mean() const { return n_ ? sum_ / n_ : 0.0; }
    double sum() const { return sum_; }
    double sum_sq() const { return sum_sq_; }
    double variance() const;  // unbiased

private:
    long long n_ = 0;
    double sum_ = 0.0;
    double sum_sq_ = 0.0;
};

}  // namespace levyvar
