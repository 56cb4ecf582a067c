#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace levyvar {

using Vec = std::vector<double>;

// Dense row-major matrix, sized for state dimensions <= 3 but not restricted to them.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, double fill = 0.0);
    static Mat identity(std::size_t n);
    static Mat diag(std::span<const double> d);
    static Mat from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec mul(std::span<const double> v) const;        // A v
    Vec tmul(std::span<const double> v) const;       // A' v
    double quad(std::span<const double> v) const;    // v' A v (square A)
    Mat transpose() const;
    bool is_symmetric(double tol) const;

    const std::vector<double>& data() const { return a_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double norm1(std::span<const double> a);
Vec axpy(double alpha, std::span<const double> x, std::span<const double> y);  // alpha*x + y
Vec scaled(std::span<const double> x, double alpha);

// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps (ascending order).
Vec sym_eigenvalues(const Mat& m);

// Cholesky factor L with A = L L'. Requires A symmetric positive semidefinite up to `tol`;
// semidefinite directions produce zero columns. Throws std::invalid_argument otherwise.
Mat cholesky_psd(const Mat& a, double tol = 1e-12);

}  // namespace levyvar
