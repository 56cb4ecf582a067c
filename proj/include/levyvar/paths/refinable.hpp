#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "levyvar/paths/bns.hpp"
#include "levyvar/paths/cogarch.hpp"
#include "levyvar/paths/sample_path.hpp"
#include "levyvar/paths/simulate.hpp"
#include "levyvar/paths/stable_like.hpp"

namespace levyvar::paths {

/// One random path observable at every dyadic level up to a finest one, with
/// shared randomness across levels so refinement ratios measure the mesh
/// effect. Lévy paths restrict exactly; scheme-based paths share the event
/// record and the Brownian increment tree.
class RefinablePath {
public:
    virtual ~RefinablePath() = default;
    virtual SamplePath at_level(int level) const = 0;
    virtual int finest_level() const = 0;
};

using RefinableFactory = std::function<std::unique_ptr<RefinablePath>(std::uint64_t seed)>;

/// Restriction of a dyadic-grid path to a coarser dyadic level (exact nesting).
SamplePath restrict_to_level(const SamplePath& fine, int fine_level, int level);

std::unique_ptr<RefinablePath> make_levy_refinable(const levy::LevyModel& model, double horizon,
                                                   int finest, std::uint64_t seed);
std::unique_ptr<RefinablePath> make_bns_refinable(const BnsModel& model, double horizon,
                                                  int finest, std::uint64_t seed);
std::unique_ptr<RefinablePath> make_cogarch_refinable(const CogarchModel& model, double horizon,
                                                      int finest, std::uint64_t seed);
/// State-dependent draws cannot be nested across levels; each level uses its own
/// derived seed instead. Ratio statistics then rely on medians over paths.
std::unique_ptr<RefinablePath> make_stable_like_refinable(const StableLikeField& field, double x0,
                                                          double horizon, int finest,
                                                          std::uint64_t seed);

}  // namespace levyvar::paths
