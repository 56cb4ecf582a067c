#include "levyvar/paths/sample_path.hpp"

#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "levyvar/core/format.hpp"

namespace levyvar::paths {

std::vector<double> GridSpec::times() const {
    validate();
    const std::size_t n = steps();
    std::vector<double> t(n + 1);
    for (std::size_t i = 0; i <= n; ++i) t[i] = horizon * static_cast<double>(i) / n;
    return t;
}

void GridSpec::validate() const {
    if (!(horizon > 0.0)) throw std::invalid_argument("grid horizon must be positive");
    if (level < 1 || level > 26) throw std::invalid_argument("grid level must be in [1, 26]");
}

std::vector<double> SamplePath::coordinate(std::size_t k) const {
    if (k >= dim) throw std::invalid_argument("coordinate index out of range");
    std::vector<double> c(size());
    for (std::size_t i = 0; i < size(); ++i) c[i] = values[i * dim + k];
    return c;
}

void SamplePath::check_consistent() const {
    if (dim == 0) throw std::invalid_argument("path dimension must be positive");
    if (values.size() != times.size() * dim)
        throw std::invalid_argument("path value and time sizes are inconsistent");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1])) throw std::invalid_argument("path times must increase");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("path values must be finite");
}

void write_csv(const SamplePath& path, std::ostream& os) {
    std::vector<std::string> head{"time"};
    for (std::size_t k = 0; k < path.dim; ++k) head.push_back("v" + std::to_string(k + 1));
    os << csv_record(head);
    std::vector<std::string> row(path.dim + 1);
    for (std::size_t i = 0; i < path.size(); ++i) {
        row[0] = fmt_full(path.times[i]);
        for (std::size_t k = 0; k < path.dim; ++k) row[k + 1] = fmt_full(path.values[i * path.dim + k]);
        os << csv_record(row);
    }
}

namespace {

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

void put_f64(std::ostream& os, double x) {
    std::uint64_t v;
    std::memcpy(&v, &x, 8);
    put_u64(os, v);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

double get_f64(std::istream& is) {
    const std::uint64_t v = get_u64(is);
    double x;
    std::memcpy(&x, &v, 8);
    return x;
}

}  // namespace

void write_binary(const SamplePath& path, std::ostream& os) {
    os.write("LVPB", 4);
    put_u32(os, 1);
    put_u32(os, static_cast<std::uint32_t>(path.dim));
    put_u64(os, path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
        put_f64(os, path.times[i]);
        for (std::size_t k = 0; k < path.dim; ++k) put_f64(os, path.values[i * path.dim + k]);
    }
}

SamplePath read_binary(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "LVPB", 4) != 0)
        throw std::runtime_error("bad path file magic");
    const std::uint32_t version = get_u32(is);
    if (version != 1) throw std::runtime_error("unsupported path file version");
    SamplePath p;
    p.dim = get_u32(is);
    const std::uint64_t n = get_u64(is);
    p.times.resize(n);
    p.values.resize(n * p.dim);
    for (std::uint64_t i = 0; i < n; ++i) {
        p.times[i] = get_f64(is);
        for (std::size_t k = 0; k < p.dim; ++k) p.values[i * p.dim + k] = get_f64(is);
    }
    if (!is) throw std::runtime_error("truncated path file");
    p.scheme = "file";
    return p;
}

SamplePath read_csv(std::istream& is) {
    SamplePath p;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty CSV");
    std::size_t cols = 1;
    for (char c : line)
        if (c == ',') ++cols;
    if (cols < 2) throw std::runtime_error("path CSV needs time and value columns");
    p.dim = cols - 1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::size_t j = 0;
        while (std::getline(ss, cell, ',')) {
            const double x = std::stod(cell);
            if (j == 0) p.times.push_back(x);
            else p.values.push_back(x);
            ++j;
        }
        if (j != cols) throw std::runtime_error("ragged path CSV row");
    }
    p.scheme = "file";
    p.check_consistent();
    return p;
}

}  // namespace levyvar::paths
