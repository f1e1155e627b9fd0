#include "tsecon/linalg.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "tsecon/error.hpp"
#include "tsecon/kernels.hpp"

namespace tsecon {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void Matrix::append_col(std::span<const double> values) {
    if (cols_ == 0 && rows_ == 0) rows_ = values.size();
    assert(values.size() == rows_);
    data_.insert(data_.end(), values.begin(), values.end());
    ++cols_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r = 0; r < rows_; ++r) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
    Matrix out(count, cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r = 0; r < count; ++r) out(r, c) = (*this)(first + r, c);
    return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> cols) const {
    Matrix out;
    for (std::size_t c : cols) out.append_col(col(c));
    if (cols.empty()) out = Matrix(rows_, 0);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols() == b.rows());
    Matrix out(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto dst = out.col(j);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double s = b(k, j);
            if (s != 0.0) kernels::axpy(s, a.col(k), dst);
        }
    }
    return out;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
    assert(a.cols() == x.size());
    std::vector<double> out(a.rows(), 0.0);
    for (std::size_t k = 0; k < a.cols(); ++k)
        if (x[k] != 0.0) kernels::axpy(x[k], a.col(k), out);
    return out;
}

Matrix gram(const Matrix& a) {
    Matrix g(a.cols(), a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = kernels::dot(a.col(i), a.col(j));
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

Matrix weighted_gram(const Matrix& a, std::span<const double> w) {
    Matrix g(a.cols(), a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = kernels::weighted_dot(a.col(i), a.col(j), w);
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

QrDecomposition::QrDecomposition(const Matrix& x, double relative_tolerance)
    : rows_(x.rows()), cols_(x.cols()), r_(x.cols(), x.cols()) {
    if (cols_ > rows_) {
        throw TooFewObservations("QR needs at least as many rows (" + std::to_string(rows_) +
                                 ") as columns (" + std::to_string(cols_) + ")");
    }
    Matrix a = x;
    reflectors_.reserve(cols_);
    betas_.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
        const double original_norm = std::sqrt(kernels::sum_squares(x.col(j)));
        std::span<double> column = a.col(j).subspan(j);
        const double norm = std::sqrt(kernels::sum_squares(column));
        if (!(norm > relative_tolerance * original_norm) || original_norm == 0.0) {
            throw RankDeficient("design column " + std::to_string(j) +
                                    " is collinear with earlier columns",
                                j);
        }
        std::vector<double> v(column.begin(), column.end());
        const double alpha = column[0] >= 0.0 ? -norm : norm;
        v[0] -= alpha;
        const double vnorm2 = kernels::sum_squares(v);
        const double beta = vnorm2 > 0.0 ? 2.0 / vnorm2 : 0.0;
        for (std::size_t c = j + 1; c < cols_; ++c) {
            std::span<double> target = a.col(c).subspan(j);
            const double s = beta * kernels::dot(v, target);
            kernels::axpy(-s, v, target);
        }
        r_(j, j) = alpha;
        for (std::size_t c = j + 1; c < cols_; ++c) r_(j, c) = a(j, c);
        reflectors_.push_back(std::move(v));
        betas_.push_back(beta);
    }
}

std::vector<double> QrDecomposition::apply_qt(std::span<const double> y) const {
    assert(y.size() == rows_);
    std::vector<double> out(y.begin(), y.end());
    for (std::size_t j = 0; j < cols_; ++j) {
        std::span<double> tail = std::span<double>(out).subspan(j);
        const double s = betas_[j] * kernels::dot(reflectors_[j], tail);
        kernels::axpy(-s, reflectors_[j], tail);
    }
    return out;
}

std::vector<double> QrDecomposition::solve(std::span<const double> y) const {
    std::vector<double> qty = apply_qt(y);
    std::vector<double> b(cols_, 0.0);
    for (std::size_t i = cols_; i-- > 0;) {
        double s = qty[i];
        for (std::size_t c = i + 1; c < cols_; ++c) s -= r_(i, c) * b[c];
        b[i] = s / r_(i, i);
    }
    return b;
}

Matrix QrDecomposition::r_inverse() const {
    Matrix inv(cols_, cols_);
    for (std::size_t col = 0; col < cols_; ++col) {
        for (std::size_t i = col + 1; i-- > 0;) {
            double s = (i == col) ? 1.0 : 0.0;
            for (std::size_t c = i + 1; c <= col; ++c) s -= r_(i, c) * inv(c, col);
            inv(i, col) = s / r_(i, i);
        }
    }
    return inv;
}

Matrix QrDecomposition::xtx_inverse() const {
    const Matrix rinv = r_inverse();
    // R^{-1} R^{-T}: entry (i,j) is the dot product of rows i and j of R^{-1}.
    const Matrix rt = rinv.transpose();
    Matrix out(cols_, cols_);
    for (std::size_t i = 0; i < cols_; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = kernels::dot(rt.col(i), rt.col(j));
            out(i, j) = v;
            out(j, i) = v;
        }
    }
    return out;
}

std::optional<Matrix> cholesky(const Matrix& a, double relative_tolerance) {
    const std::size_t n = a.rows();
    assert(n == a.cols());
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(a(i, i)));
    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > relative_tolerance * max_diag) || !std::isfinite(d)) return std::nullopt;
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / ljj;
        }
    }
    return l;
}

std::vector<double> forward_substitute(const Matrix& lower, std::span<const double> b) {
    const std::size_t n = lower.rows();
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= lower(i, k) * z[k];
        z[i] = s / lower(i, i);
    }
    return z;
}

std::optional<Matrix> spd_inverse(const Matrix& a, double relative_tolerance) {
    auto l = cholesky(a, relative_tolerance);
    if (!l) return std::nullopt;
    const std::size_t n = a.rows();
    Matrix inv(n, n);
    std::vector<double> e(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(e.begin(), e.end(), 0.0);
        e[c] = 1.0;
        std::vector<double> z = forward_substitute(*l, e);
        // back substitution with L'
        for (std::size_t i = n; i-- > 0;) {
            double s = z[i];
            for (std::size_t k = i + 1; k < n; ++k) s -= (*l)(k, i) * inv(k, c);
            inv(i, c) = s / (*l)(i, i);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const double v = 0.5 * (inv(i, j) + inv(j, i));
            inv(i, j) = v;
            inv(j, i) = v;
        }
    return inv;
}

std::optional<double> spd_log_determinant(const Matrix& a) {
    auto l = cholesky(a, 0.0);
    if (!l) return std::nullopt;
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::log((*l)(i, i));
    return 2.0 * s;
}

}  // namespace tsecon
