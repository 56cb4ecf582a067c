#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levyvar/core/linalg.hpp"
#include "levyvar/core/rng.hpp"
#include "levyvar/levy/jump.hpp"

namespace levyvar::levy {

// Characteristic triplet in the truncated-compensator convention; the cutoff is the
// indicator of the closed unit ball throughout.
struct LevyTriplet {
    Vec drift;
    Mat gaussian;
    std::vector<JumpComponent> jumps;
};

struct ClassicalIndices {
    double beta = 0.0;    // small-jump activity index; reported as 2 when a Gaussian part exists
    double beta1 = 0.0;   // growth index of |psi|
    double beta2 = 0.0;   // growth index of Re psi
    std::optional<double> beta1_numeric;  // slope estimate from log |psi|
    std::optional<double> beta1_gap;      // |beta1 - beta1_numeric|
};

struct JumpEvent {
    double time = 0.0;
    Vec size;
};

// A Levy process assembled from a linear drift, a Gaussian part and independent jump
// components. `drift` here is the realized path drift: the jump components follow their
// driftless canonical conventions, and triplet() adds the cutoff compensators back.
class LevyModel {
public:
    LevyModel(Vec drift, Mat gaussian, std::vector<JumpComponent> jumps, std::string label);

    static LevyModel brownian(std::size_t dim = 1, double variance = 1.0);
    static LevyModel pure_drift(Vec l);
    static LevyModel symmetric_stable(double alpha, double scale = 1.0);
    static LevyModel compound_poisson(double rate, JumpDist dist);
    static LevyModel gamma_subordinator(double shape, double rate);
    static LevyModel finite_atomic(std::vector<Atom> atoms);
    // Independent stacking: the product process (Z1, ..., Zk).
    static LevyModel product(const std::vector<LevyModel>& parts, std::string label);

    LevyModel with_drift(const Vec& extra) const;
    LevyModel with_label(std::string label) const;

    std::size_t dim() const { return drift_.size(); }
    const Vec& path_drift() const { return drift_; }
    const Mat& gaussian() const { return gaussian_; }
    const std::vector<JumpComponent>& jumps() const { return jumps_; }
    const std::string& label() const { return label_; }

    bool has_gaussian_part() const;
    bool mirrorable() const;          // sign-flipped increments keep the law
    bool jumps_enumerable() const;    // only compound Poisson / atomic components

    Complex char_exponent(std::span<const double> xi) const;
    LevyTriplet triplet() const;

    // One exact increment over dt. With mirror=true the same draws are consumed and the
    // signs of the symmetric parts are flipped (valid only when mirrorable()).
    Vec sample_increment(double dt, Rng& rng, bool mirror = false) const;

    // Exact jump times and sizes over [0, T] for enumerable components, sorted by time.
    std::vector<JumpEvent> sample_jump_events(double T, Rng& rng) const;

private:
    Vec drift_;
    Mat gaussian_;
    Mat chol_;  // cached factor of gaussian_
    std::vector<JumpComponent> jumps_;
    std::string label_;
};

// Module operations in free-function form.
Complex char_exponent(const LevyModel& m, std::span<const double> xi);
// Triplet-form evaluation with the truncated compensator; round-trips with the model form.
Complex char_exponent(const LevyTriplet& t, std::span<const double> xi);
ClassicalIndices classical_indices(const LevyModel& m, bool with_numeric = true);
Vec sample_increment(const LevyModel& m, double dt, Rng& rng);

}  // namespace levyvar::levy
