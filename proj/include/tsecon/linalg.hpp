#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tsecon {

/// Dense column-major matrix. Columns are contiguous so regression designs can
/// hand each regressor to the SIMD kernels as a span.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[c * rows_ + r]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[c * rows_ + r]; }

    [[nodiscard]] std::span<double> col(std::size_t c) noexcept {
        return {data_.data() + c * rows_, rows_};
    }
    [[nodiscard]] std::span<const double> col(std::size_t c) const noexcept {
        return {data_.data() + c * rows_, rows_};
    }

    /// Appends a column; `values.size()` must equal rows() (or set rows on an empty matrix).
    void append_col(std::span<const double> values);

    [[nodiscard]] Matrix transpose() const;
    /// Rows [first, first + count) of every column.
    [[nodiscard]] Matrix row_block(std::size_t first, std::size_t count) const;
    /// Columns selected by index, in the given order.
    [[nodiscard]] Matrix select_cols(std::span<const std::size_t> cols) const;

    [[nodiscard]] const std::vector<double>& storage() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

/// Gram matrix A'A (symmetric, computed with the active dot kernel).
Matrix gram(const Matrix& a);
/// A' diag(w) A
Matrix weighted_gram(const Matrix& a, std::span<const double> w);

/// Householder QR of a tall design matrix without column pivoting.
///
/// A column whose remaining norm after orthogonalisation falls below
/// `relative_tolerance` times its original norm is numerically a combination
/// of the columns before it; construction throws RankDeficient naming it.
class QrDecomposition {
public:
    explicit QrDecomposition(const Matrix& x, double relative_tolerance = 1e-10);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    /// Least-squares coefficients minimising ||y − Xb||.
    [[nodiscard]] std::vector<double> solve(std::span<const double> y) const;
    /// Q'y (length rows()).
    [[nodiscard]] std::vector<double> apply_qt(std::span<const double> y) const;
    /// Upper-triangular R^{-1}.
    [[nodiscard]] Matrix r_inverse() const;
    /// (X'X)^{-1} = R^{-1} R^{-T}.
    [[nodiscard]] Matrix xtx_inverse() const;
    [[nodiscard]] double r(std::size_t i, std::size_t j) const noexcept { return r_(i, j); }

private:
    std::size_t rows_;
    std::size_t cols_;
    Matrix r_;
    std::vector<std::vector<double>> reflectors_;
    std::vector<double> betas_;
};

/// Lower Cholesky factor of a symmetric positive definite matrix, or nullopt
/// when a pivot falls below `relative_tolerance` times the largest diagonal.
std::optional<Matrix> cholesky(const Matrix& a, double relative_tolerance = 1e-12);
/// Inverse of an SPD matrix via Cholesky; nullopt when not positive definite.
std::optional<Matrix> spd_inverse(const Matrix& a, double relative_tolerance = 1e-12);
/// log|A| for SPD A; nullopt when not positive definite.
std::optional<double> spd_log_determinant(const Matrix& a);

/// Solves L z = b for lower-triangular L.
std::vector<double> forward_substitute(const Matrix& lower, std::span<const double> b);

}  // namespace tsecon
