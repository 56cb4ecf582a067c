#pragma once

#include <cstdint>
#include <vector>

#include "levyvar/core/rng.hpp"
#include "levyvar/levy/model.hpp"
#include "levyvar/paths/sample_path.hpp"
#include "levyvar/paths/sde.hpp"

namespace levyvar::paths {

/// Driver increments over the grid cells, one row per cell. Jump events of the
/// enumerable components are drawn first, then the remaining parts cell by cell,
/// so the event list is reproducible from the same generator state.
struct DriverIncrements {
    std::vector<double> increments;  // steps x dim, row-major
    std::vector<PathJump> jumps;     // enumerable jumps only, sorted by time
    std::size_t dim = 1;
};

DriverIncrements sample_driver_increments(const levy::LevyModel& m, const GridSpec& grid,
                                          Rng& rng);

/// Exact-in-law path on the dyadic grid; values start at 0.
SamplePath simulate_levy(const levy::LevyModel& m, const GridSpec& grid, std::uint64_t seed);

/// Euler scheme with the coefficient frozen at the left endpoint. States leaving
/// the ball of radius `explosion_cap` freeze the path and mark it truncated.
SamplePath simulate_sde_euler(const SdeModel& sde, const GridSpec& grid, std::uint64_t seed,
                              double explosion_cap = 1e12);

/// Euler core with caller-supplied driver increments, for strong-convergence
/// comparisons against a shared driver path across grid levels.
SamplePath sde_euler_from_increments(const SdeModel& sde, const GridSpec& grid,
                                     const DriverIncrements& inc, double explosion_cap = 1e12);

/// Cell sums of a finer increment array restricted to a coarser dyadic level.
DriverIncrements coarsen_increments(const DriverIncrements& fine, int fine_level, int level);

}  // namespace levyvar::paths
