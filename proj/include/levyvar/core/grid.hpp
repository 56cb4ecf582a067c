#pragma once

#include <cstddef>
#include <vector>

#include "levyvar/core/linalg.hpp"

namespace levyvar {

// Probe-grid resolution for the sup-evaluations over balls and boxes.
struct GridCfg {
    int directions = 64;      // direction count on the unit sphere (2 in dimension 1)
    int radii = 32;           // radial subdivisions of a ball, boundary included
    int x_points = 65;        // per-axis points for box grids
};

// Axis-aligned box [lo_i, hi_i]^d.
struct Box {
    Vec lo;
    Vec hi;
    std::size_t dim() const { return lo.size(); }
    static Box centered(const Vec& center, double half_width);
    Box doubled() const;  // same center, twice the half-widths
};

// Deterministic unit directions: signs in d=1, uniform angles in d=2, Fibonacci sphere in d=3.
std::vector<Vec> unit_directions(std::size_t dim, int count);

// Points of the closed ball B_radius(center): center plus directions x radial shells.
std::vector<Vec> ball_grid(const Vec& center, double radius, const GridCfg& cfg);

// Uniform tensor grid over a box with cfg.x_points per axis.
std::vector<Vec> box_grid(const Box& box, const GridCfg& cfg);

// Geometric scale grid 2^{-k} for k in [k_lo, k_hi].
Vec dyadic_scales(int k_lo, int k_hi);

}  // namespace levyvar
