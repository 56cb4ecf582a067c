#include "levyvar/core/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace levyvar {

Box Box::centered(const Vec& center, double half_width) {
    Box b;
    b.lo = center;
    b.hi = center;
    for (std::size_t i = 0; i < center.size(); ++i) {
        b.lo[i] -= half_width;
        b.hi[i] += half_width;
    }
    return b;
}

Box Box::doubled() const {
    Box b = *this;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        const double c = 0.5 * (lo[i] + hi[i]);
        const double w = hi[i] - c;
        b.lo[i] = c - 2.0 * w;
        b.hi[i] = c + 2.0 * w;
    }
    return b;
}

std::vector<Vec> unit_directions(std::size_t dim, int count) {
    if (count < 1) throw std::invalid_argument("direction count must be positive");
    std::vector<Vec> dirs;
    switch (dim) {
        case 1:
            dirs.push_back({1.0});
            dirs.push_back({-1.0});
            break;
        case 2:
            for (int j = 0; j < count; ++j) {
                const double phi = 2.0 * std::numbers::pi * j / count;
                dirs.push_back({std::cos(phi), std::sin(phi)});
            }
            break;
        case 3: {
            const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
            for (int j = 0; j < count; ++j) {
                const double z = 1.0 - 2.0 * (j + 0.5) / count;
                const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
                dirs.push_back({r * std::cos(ga * j), r * std::sin(ga * j), z});
            }
            break;
        }
        default:
            throw std::invalid_argument("grids support dimensions 1 to 3");
    }
    return dirs;
}

std::vector<Vec> ball_grid(const Vec& center, double radius, const GridCfg& cfg) {
    if (radius < 0.0) throw std::invalid_argument("ball radius must be nonnegative");
    std::vector<Vec> pts;
    pts.push_back(center);
    if (radius == 0.0) return pts;
    const auto dirs = unit_directions(center.size(), cfg.directions);
    for (const auto& u : dirs) {
        for (int r = 1; r <= cfg.radii; ++r) {
            const double rho = radius * r / cfg.radii;
            pts.push_back(axpy(rho, u, center));
        }
    }
    return pts;
}

std::vector<Vec> box_grid(const Box& box, const GridCfg& cfg) {
    const std::size_t d = box.dim();
    if (d < 1 || d > 3) throw std::invalid_argument("grids support dimensions 1 to 3");
    const int n = cfg.x_points;
    if (n < 2) throw std::invalid_argument("box grid needs at least 2 points per axis");
    std::vector<Vec> pts;
    std::vector<int> idx(d, 0);
    for (;;) {
        Vec p(d);
        for (std::size_t i = 0; i < d; ++i)
            p[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * idx[i] / (n - 1);
        pts.push_back(std::move(p));
        std::size_t axis = 0;
        while (axis < d && ++idx[axis] == n) {
            idx[axis] = 0;
            ++axis;
        }
        if (axis == d) break;
    }
    return pts;
}

Vec dyadic_scales(int k_lo, int k_hi) {
    if (k_lo > k_hi) throw std::invalid_argument("dyadic scale range is empty");
    Vec s;
    for (int k = k_lo; k <= k_hi; ++k) s.push_back(std::ldexp(1.0, -k));
    return s;
}

}  // namespace levyvar
