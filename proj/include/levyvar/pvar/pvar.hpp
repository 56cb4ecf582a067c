#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace levyvar::pvar {

// View of a d-dimensional sequence stored row-major (point i at [i*dim, (i+1)*dim)).
struct SeqView {
    std::span<const double> values;
    std::size_t dim = 1;
    std::size_t size() const { return dim == 0 ? 0 : values.size() / dim; }
    std::span<const double> point(std::size_t i) const { return values.subspan(i * dim, dim); }
};

struct PVarResult {
    double p = 0.0;
    double value = 0.0;
    std::vector<std::size_t> partition;  // optimal index subsequence, includes both endpoints
    std::string method;                  // "full", "dp" or "bruteforce"
};

struct PVarCfg {
    std::size_t max_points = 1u << 16;
};

// Strong p-variation of the sampled sequence: sup over partitions of sum ||increment||_2^p.
// For p <= 1 the full partition is optimal and is returned directly; for p > 1 an exact
// dynamic program runs over direction-change points (dimension 1) or all points.
PVarResult pvar_exact(SeqView seq, double p, const PVarCfg& cfg = {});
PVarResult pvar_exact(std::span<const double> values, double p, const PVarCfg& cfg = {});

// Exponential-time reference: enumerates all partitions. Refuses n > 20.
PVarResult pvar_bruteforce(SeqView seq, double p);
PVarResult pvar_bruteforce(std::span<const double> values, double p);

struct PVarComponents {
    PVarResult total;                    // Euclidean norm
    std::vector<PVarResult> per_coord;
    double lower_bound = 0.0;            // max over coordinates
    double upper_bound = 0.0;            // norm-equivalence bound from coordinate values
};

// Coordinate-wise p-variations with the two-sided bound on the Euclidean value implied by
// (1/sqrt(d)) ||v||_1 <= ||v||_2 <= ||v||_1.
PVarComponents pvar_components(SeqView seq, double p, const PVarCfg& cfg = {});

}  // namespace levyvar::pvar
