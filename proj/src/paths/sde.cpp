#include "levyvar/paths/sde.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace levyvar::paths {

Mat CoeffField::at(std::span<const double> x) const {
    if (x.size() != state_dim) throw std::invalid_argument("coefficient field: wrong state dim");
    Mat m = phi(x);
    if (m.rows() != state_dim || m.cols() != driver_dim)
        throw std::logic_error("coefficient field returned wrong shape");
    return m;
}

CoeffField CoeffField::linear_1d() {
    CoeffField f;
    f.state_dim = 1;
    f.driver_dim = 1;
    f.label = "linear";
    f.bounded = false;
    f.lipschitz = true;
    f.phi = [](std::span<const double> x) {
        Mat m(1, 1);
        m(0, 0) = x[0];
        return m;
    };
    return f;
}

CoeffField CoeffField::constant(Mat m, std::string label) {
    CoeffField f;
    f.state_dim = m.rows();
    f.driver_dim = m.cols();
    f.label = std::move(label);
    f.bounded = true;
    f.lipschitz = true;
    f.phi = [m](std::span<const double>) { return m; };
    return f;
}

CoeffField CoeffField::projection_12_of_3() {
    Mat m(2, 3);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return constant(m, "proj12");
}

CoeffField CoeffField::bounded_sin_1d(double amplitude, double offset) {
    if (!(amplitude >= 0.0) || !(offset > amplitude))
        throw std::invalid_argument("bounded sin field needs offset > amplitude >= 0");
    CoeffField f;
    f.state_dim = 1;
    f.driver_dim = 1;
    f.label = "sin-bounded";
    f.bounded = true;
    f.lipschitz = true;
    f.phi = [amplitude, offset](std::span<const double> x) {
        Mat m(1, 1);
        m(0, 0) = offset + amplitude * std::sin(x[0]);
        return m;
    };
    return f;
}

SdeModel::SdeModel(CoeffField phi_, levy::LevyModel driver_, Vec x0_, std::string label_)
    : phi(std::move(phi_)), driver(std::move(driver_)), x0(std::move(x0_)), label(std::move(label_)) {
    if (x0.size() != phi.state_dim) throw std::invalid_argument("sde: x0 has wrong dimension");
    if (driver.dim() != phi.driver_dim) throw std::invalid_argument("sde: driver dim mismatch");
    if (!phi.phi) throw std::invalid_argument("sde: empty coefficient field");
}

}  // namespace levyvar::paths
