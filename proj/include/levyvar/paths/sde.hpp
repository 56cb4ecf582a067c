#pragma once

#include <functional>
#include <span>
#include <string>

#include "levyvar/core/linalg.hpp"
#include "levyvar/levy/model.hpp"

namespace levyvar::paths {

/// Coefficient field x -> Phi(x) for dX = Phi(X_-) dL.  Phi(x) maps driver
/// increments (dim driver_dim) into state increments (dim state_dim), so the
/// matrix is state_dim x driver_dim.
struct CoeffField {
    std::size_t state_dim = 1;
    std::size_t driver_dim = 1;
    std::function<Mat(std::span<const double>)> phi;
    std::string label;
    bool bounded = false;     // sup_x ||Phi(x)|| finite
    bool lipschitz = false;   // globally Lipschitz (sufficient for well-posedness)

    Mat at(std::span<const double> x) const;

    static CoeffField linear_1d();                       // Phi(x) = x
    static CoeffField constant(Mat m, std::string label);
    static CoeffField projection_12_of_3();              // rows e1, e2 of R^3
    static CoeffField bounded_sin_1d(double amplitude, double offset);
};

struct SdeModel {
    CoeffField phi;
    levy::LevyModel driver;
    Vec x0;
    std::string label;

    SdeModel(CoeffField phi_, levy::LevyModel driver_, Vec x0_, std::string label_);
};

}  // namespace levyvar::paths
