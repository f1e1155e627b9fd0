#include <cmath>
#include <vector>

#include "doctest.h"
#include "tsecon/error.hpp"
#include "tsecon/linalg.hpp"
#include "tsecon/random.hpp"

using namespace tsecon;

namespace {

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < r; ++i) m(i, j) = rng.normal();
    return m;
}

// Gauss-Jordan inverse with partial pivoting, written independently of the library.
std::vector<std::vector<double>> gj_inverse(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        const double d = a[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] /= d;
            inv[c][k] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = a[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

}  // namespace

TEST_CASE("matrix basics") {
    Matrix a(2, 3);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
    a(1, 0) = 4; a(1, 1) = 5; a(1, 2) = 6;
    const Matrix t = a.transpose();
    CHECK(t.rows() == 3);
    CHECK(t(2, 1) == 6);
    const Matrix p = a * t;
    CHECK(p(0, 0) == 14);
    CHECK(p(0, 1) == 32);
    CHECK(p(1, 1) == 77);
    const Matrix g = gram(a);
    CHECK(g(1, 2) == 2 * 3 + 5 * 6);
    const std::vector<double> w{2.0, 0.5};
    CHECK(weighted_gram(a, w)(0, 2) == 2 * 1 * 3 + 0.5 * 4 * 6);
    const std::size_t cols[] = {2, 0};
    const Matrix s = a.select_cols(cols);
    CHECK(s(1, 0) == 6);
    CHECK(s(1, 1) == 4);
    const Matrix rb = a.row_block(1, 1);
    CHECK(rb.rows() == 1);
    CHECK(rb(0, 2) == 6);
    Matrix e;
    e.append_col(std::vector<double>{1, 2, 3});
    CHECK(e.rows() == 3);
    CHECK(Matrix::identity(3)(2, 2) == 1.0);
}

TEST_CASE("QR least squares matches the normal equations") {
    Rng rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 10 + static_cast<std::size_t>(rep), k = 1 + static_cast<std::size_t>(rep % 5);
        const Matrix x = random_matrix(rng, n, k);
        std::vector<double> y(n);
        for (double& v : y) v = rng.normal();
        const QrDecomposition qr(x);
        const auto b = qr.solve(y);

        std::vector<std::vector<double>> xtx(k, std::vector<double>(k));
        std::vector<double> xty(k, 0.0);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t r = 0; r < n; ++r) xtx[i][j] += x(r, i) * x(r, j);
            for (std::size_t r = 0; r < n; ++r) xty[i] += x(r, i) * y[r];
        }
        const auto inv = gj_inverse(xtx);
        const Matrix qinv = qr.xtx_inverse();
        for (std::size_t i = 0; i < k; ++i) {
            double bi = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                bi += inv[i][j] * xty[j];
                CHECK(qinv(i, j) == doctest::Approx(inv[i][j]).epsilon(1e-9));
            }
            CHECK(b[i] == doctest::Approx(bi).epsilon(1e-9));
        }
        // Q'y preserves the norm
        const auto qty = qr.apply_qt(y);
        double a = 0.0, c = 0.0;
        for (double v : y) a += v * v;
        for (double v : qty) c += v * v;
        CHECK(a == doctest::Approx(c).epsilon(1e-12));
    }
}

TEST_CASE("QR reports the first collinear column") {
    Rng rng(5);
    Matrix x = random_matrix(rng, 20, 4);
    for (std::size_t r = 0; r < 20; ++r) x(r, 2) = 2.0 * x(r, 0) - x(r, 1);
    try {
        QrDecomposition qr(x);
        FAIL("expected RankDeficient");
    } catch (const RankDeficient& e) {
        CHECK(e.column() == 2);
        CHECK(e.category() == ErrorCategory::Numerical);
    }
    CHECK_THROWS_AS(QrDecomposition(random_matrix(rng, 3, 4)), TooFewObservations);
}

TEST_CASE("Cholesky, SPD inverse and log determinant") {
    Rng rng(11);
    const Matrix a = random_matrix(rng, 30, 4);
    const Matrix s = gram(a);
    const auto l = cholesky(s);
    REQUIRE(l.has_value());
    const Matrix back = *l * l->transpose();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(back(i, j) == doctest::Approx(s(i, j)).epsilon(1e-12));
    const auto inv = spd_inverse(s);
    REQUIRE(inv.has_value());
    const Matrix id = s * *inv;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(id(i, j) - (i == j ? 1.0 : 0.0)) < 1e-10);
    double logdet = 0.0;
    for (std::size_t i = 0; i < 4; ++i) logdet += 2.0 * std::log((*l)(i, i));
    CHECK(*spd_log_determinant(s) == doctest::Approx(logdet).epsilon(1e-12));

    Matrix singular(2, 2, 1.0);
    CHECK_FALSE(cholesky(singular).has_value());
    CHECK_FALSE(spd_inverse(singular).has_value());

    const std::vector<double> rhs{1.0, 2.0, 3.0, 4.0};
    const auto z = forward_substitute(*l, rhs);
    const auto lz = *l * std::span<const double>(z);
    for (std::size_t i = 0; i < 4; ++i) CHECK(lz[i] == doctest::Approx(rhs[i]).epsilon(1e-12));
}
