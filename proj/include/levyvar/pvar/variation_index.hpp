#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "levyvar/paths/refinable.hpp"
#include "levyvar/pvar/pvar.hpp"

namespace levyvar::pvar {

enum class Verdict { finite, infinite, inconclusive };

const char* to_string(Verdict v);

struct VarIndexThresholds {
    double finite_eps = 0.1;    // median ratio <= 1 + finite_eps   -> finite
    double infinite_eps = 0.2;  // median ratio >= 1 + infinite_eps -> infinite
};

struct VarIndexRow {
    double p = 1.0;
    Verdict verdict = Verdict::inconclusive;
    double ratio = 1.0;                 // median per-path growth across the two finest levels
    std::vector<double> median_values;  // median V^p per level
    std::vector<double> median_ratios;  // median per-path growth vs the previous level (first = 1)
};

struct VarIndexReport {
    std::vector<int> levels;
    std::vector<VarIndexRow> rows;  // one per p, in p_grid order
    double v_hat = 0.0;             // midpoint of the largest infinite p and smallest finite p
    bool boundary = false;          // no verdict on one side: v_hat pinned to a grid edge
    std::size_t dropped_paths = 0;

    std::string csv() const;  // header + (p, level, median_V, ratio, verdict) rows
};

// Empirical variation index over nested dyadic refinements. Each path is generated once
// per seed and restricted to every requested level, so growth ratios isolate the mesh
// effect. Verdicts are made monotone in p by widening the inconclusive band when the
// raw verdicts invert. `coordinate` selects one path coordinate; the full
// vector path is used otherwise.
VarIndexReport variation_index_estimate(const paths::RefinableFactory& factory,
                                        std::span<const int> levels,
                                        std::span<const double> p_grid, std::size_t n_paths,
                                        std::uint64_t seed,
                                        std::optional<std::size_t> coordinate = {},
                                        const VarIndexThresholds& thresholds = {},
                                        int workers = 1);

}  // namespace levyvar::pvar
