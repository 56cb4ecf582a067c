#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "levyvar/core/linalg.hpp"

namespace levyvar::paths {

// Dyadic grid on [0, T] with 2^level cells.
struct GridSpec {
    double horizon = 1.0;
    int level = 10;

    std::size_t steps() const { return static_cast<std::size_t>(1) << level; }
    double mesh() const { return horizon / static_cast<double>(steps()); }
    std::vector<double> times() const;
    void validate() const;  // horizon > 0, level in [1, 26]
};

struct PathJump {
    double time = 0.0;
    Vec size;
};

enum class PathStatus { ok, truncated };

struct SamplePath {
    std::vector<double> times;
    std::vector<double> values;  // row-major, `dim` entries per time
    std::size_t dim = 1;
    std::string scheme;
    std::uint64_t seed = 0;
    std::vector<PathJump> jumps;  // exact event record where the scheme supports one
    PathStatus status = PathStatus::ok;
    std::vector<std::string> warnings;

    std::size_t size() const { return times.size(); }
    std::span<const double> at(std::size_t i) const {
        return std::span<const double>(values).subspan(i * dim, dim);
    }
    std::vector<double> coordinate(std::size_t k) const;
    void check_consistent() const;
};

// CSV: header "time,v1,..,vd" then one row per grid time.
void write_csv(const SamplePath& path, std::ostream& os);

// Binary dump: magic "LVPB", u32 version, u32 dim, u64 count, then count records of
// (time, values...) as little-endian float64.
void write_binary(const SamplePath& path, std::ostream& os);
SamplePath read_binary(std::istream& is);

// Reads a CSV written by write_csv (numeric payload only).
SamplePath read_csv(std::istream& is);

}  // namespace levyvar::paths
