#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracle_values.hpp"
#include "support.hpp"
#include "tsecon/core_stats.hpp"
#include "tsecon/distributions.hpp"
#include "tsecon/error.hpp"
#include "tsecon/random.hpp"

using namespace tsecon;
using testing::close;

TEST_CASE("descriptive summary matches scipy") {
    const auto s = describe(std::span<const double>(oracle::kDescData), "G");
    const double* e = oracle::kDescExpect;
    CHECK(s.n == 60);
    CHECK(close(s.mean, e[0], 1e-12, 1e-12));
    CHECK(s.median == e[1]);
    CHECK(s.maximum == e[2]);
    CHECK(s.minimum == e[3]);
    CHECK(close(s.std_dev, e[4], 0, 1e-12));
    CHECK(close(s.skewness, e[5], 0, 1e-10));
    CHECK(close(s.kurtosis, e[6], 0, 1e-10));
    CHECK(close(s.jarque_bera, e[7], 0, 1e-10));
    CHECK(close(s.jb_pvalue, e[8], 0, 1e-6));
    CHECK(s.name == "G");
}

TEST_CASE("reference skewness and kurtosis reproduce the JB values") {
    // (S, K, reported JB), n = 88; inputs are rounded to two decimals
    struct Row { double s, k, jb; };
    const Row rows[] = {{-0.36, 2.30, 3.69}, {1.58, 4.93, 50.42}, {0.53, 2.96, 4.05},
                        {-0.11, 2.53, 1.00}, {1.01, 3.20, 15.04}, {3.83, 15.66, 802.72}};
    for (const auto& r : rows) CHECK(std::abs(jarque_bera(r.s, r.k, 88) - r.jb) <= 1.0);
    CHECK(jarque_bera(3.83, 15.66, 88) == doctest::Approx(88.0 / 6.0 * (3.83 * 3.83 + 12.66 * 12.66 / 4.0)));
}

TEST_CASE("JB p-values are the chi-square(2) tail") {
    CHECK(std::abs(chi2_sf(3.69, 2) - 0.16) <= 0.01);
    CHECK(std::abs(chi2_sf(4.05, 2) - 0.13) <= 0.01);
    CHECK(std::abs(chi2_sf(1.00, 2) - 0.61) <= 0.01);
    for (double jb : {0.0, 0.5, 3.69, 50.42, 802.72}) CHECK(close(chi2_sf(jb, 2), std::exp(-jb / 2.0), 1e-300, 1e-12));
}

TEST_CASE("median conventions") {
    const double odd[] = {3, 1, 2};
    const double even[] = {4, 1, 3, 2};
    CHECK(median(odd) == 2.0);
    CHECK(median(even) == 2.5);
}

TEST_CASE("describe properties") {
    Rng rng(99);
    std::vector<double> v(200);
    for (double& x : v) x = std::exp(rng.normal());
    const auto a = describe(v);
    CHECK(a.jarque_bera >= 0.0);
    CHECK(a.jb_pvalue >= 0.0);
    CHECK(a.jb_pvalue <= 1.0);
    CHECK(a.minimum <= a.median);
    CHECK(a.median <= a.maximum);

    std::vector<double> neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](double x) { return -x; });
    const auto b = describe(neg);
    CHECK(b.skewness == doctest::Approx(-a.skewness).epsilon(1e-12));
    CHECK(b.kurtosis == doctest::Approx(a.kurtosis).epsilon(1e-12));

    // relabeling the index leaves the summary unchanged
    const auto m = testing::dataset({{"V", v}}, Frequency::Monthly);
    const auto d = testing::dataset({{"V", v}}, Frequency::Daily);
    const auto sm = describe(m.at("V"));
    const auto sd = describe(d.at("V"));
    CHECK(sm.mean == sd.mean);
    CHECK(sm.kurtosis == sd.kurtosis);
    CHECK(sm.jarque_bera == sd.jarque_bera);

    // large normal sample: skewness near 0, kurtosis near 3
    std::vector<double> z(20000);
    for (double& x : z) x = rng.normal();
    const auto sz = describe(z);
    CHECK(std::abs(sz.skewness) < 0.06);
    CHECK(std::abs(sz.kurtosis - 3.0) < 0.12);
}

TEST_CASE("degenerate and short inputs") {
    const double flat[] = {2, 2, 2, 2, 2};
    CHECK_THROWS_AS(describe(flat), DegenerateSeries);
    const double few[] = {1, 2, 3};
    CHECK_THROWS(describe(few));
}

TEST_CASE("correlation") {
    const double* y = oracle::kRegY;
    const double* x1 = oracle::kRegX1;
    const double* x2 = oracle::kRegX2;
    const std::size_t n = std::size(oracle::kRegY);
    CHECK(close(pearson({y, n}, {x1, n}), oracle::kOlsCorr[0], 1e-12));
    CHECK(close(pearson({y, n}, {x2, n}), oracle::kOlsCorr[1], 1e-12));

    const auto d = testing::dataset({{"Y", {y, y + n}}, {"X1", {x1, x1 + n}}, {"X2", {x2, x2 + n}}});
    const auto c = correlation_matrix(d);
    CHECK(c.names == std::vector<std::string>{"Y", "X1", "X2"});
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(c.entries(i, i) == 1.0);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(c.entries(i, j) == c.entries(j, i));
            CHECK(std::abs(c.entries(i, j)) <= 1.0);
        }
    }
    CHECK(close(c.entries(1, 2), oracle::kOlsCorr[2], 1e-12));

    std::vector<double> a{1, 2, 3, 4}, b{2, 4, 6, 8}, nb{-3, -6, -9, -12};
    CHECK(pearson(a, b) == doctest::Approx(1.0));
    CHECK(pearson(a, nb) == doctest::Approx(-1.0));
    std::vector<double> k{5, 5, 5, 5};
    CHECK_THROWS_AS(pearson(a, k), DegenerateSeries);
}
