#include <cmath>
#include <map>
#include <numeric>

#include "doctest.h"
#include "support.hpp"
#include "tsecon/ardl_ecm.hpp"
#include "tsecon/distributions.hpp"
#include "tsecon/error.hpp"
#include "tsecon/simulate.hpp"

using namespace tsecon;
using testing::close;

namespace {

ArdlSpec system_spec(std::size_t p_max = 3, std::size_t q_max = 2) {
    ArdlSpec s;
    s.dependent = "Y";
    s.dependent_max_lag = p_max;
    for (const char* x : {"X1", "X2", "X3", "X4"}) s.regressors.push_back({x, q_max});
    s.fixed = {"DPOL"};
    return s;
}

ArdlSpec pair_spec(std::size_t p_max, std::size_t q_max) {
    ArdlSpec s;
    s.dependent = "Y";
    s.dependent_max_lag = p_max;
    s.regressors = {{"X", q_max}};
    return s;
}

// Every grid point estimated independently by QR on the common sample.
std::map<std::vector<std::size_t>, double> brute_force(const ArdlSpec& spec, const Dataset& data) {
    ArdlOrders largest{spec.dependent_max_lag, {}};
    for (const auto& r : spec.regressors) largest.q.push_back(r.max_lag);
    const std::size_t start = build_design(ardl_regression(spec, largest), data).first_row;
    std::map<std::vector<std::size_t>, double> out;
    std::vector<std::size_t> q(spec.regressors.size(), 0);
    for (std::size_t p = 1; p <= spec.dependent_max_lag; ++p) {
        std::fill(q.begin(), q.end(), 0);
        while (true) {
            auto rs = ardl_regression(spec, {p, q}, start);
            rs.covariance = CovarianceSpec::classical();
            const auto f = ols_fit(rs, data);
            std::vector<std::size_t> key{p};
            key.insert(key.end(), q.begin(), q.end());
            out[key] = information_criterion(f, spec.criterion);
            std::size_t j = 0;
            while (j < q.size() && q[j] == spec.regressors[j].max_lag) q[j++] = 0;
            if (j == q.size()) break;
            ++q[j];
        }
    }
    return out;
}

std::vector<std::size_t> key_of(const ArdlOrders& o) {
    std::vector<std::size_t> k{o.p};
    k.insert(k.end(), o.q.begin(), o.q.end());
    return k;
}

}  // namespace

TEST_CASE("grid search agrees with brute-force QR") {
    Rng rng(20080101);
    const auto data = sim::cointegrated_system(rng, 240, 4);
    for (auto ic : {InfoCriterion::Sic, InfoCriterion::Aic}) {
        auto spec = system_spec(3, 2);
        spec.criterion = ic;
        const auto fit = ardl_search(spec, data);
        const auto oracle = brute_force(spec, data);
        REQUIRE(fit.trace.size() == oracle.size());
        CHECK(fit.trace.size() == 3 * 81);
        for (const auto& e : fit.trace) {
            const auto it = oracle.find(key_of(e.orders));
            REQUIRE(it != oracle.end());
            CHECK(close(e.value, it->second, 1e-10, 1e-10));
        }
        // winner: minimum, then fewer total lags, then lexicographic
        auto best = oracle.begin();
        for (auto it = oracle.begin(); it != oracle.end(); ++it) {
            const auto total = [](const std::vector<std::size_t>& k) { return std::accumulate(k.begin(), k.end(), std::size_t{0}); };
            if (it->second < best->second - 1e-12 ||
                (std::abs(it->second - best->second) <= 1e-12 && total(it->first) < total(best->first)))
                best = it;
        }
        CHECK(key_of(fit.orders) == best->first);
    }
}

TEST_CASE("winner is refit on its maximal sample") {
    Rng rng(7);
    const auto data = sim::cointegrated_system(rng, 200, 4);
    const auto spec = system_spec(4, 3);
    const auto fit = ardl_search(spec, data);
    const auto direct = ardl_fit(spec, fit.orders, data);
    CHECK(direct.fit.coefficients == fit.fit.coefficients);
    CHECK(fit.design.first_row == build_design(ardl_regression(spec, fit.orders), data).first_row);
    CHECK(fit.fit.covariance.kind == CovarianceKind::Hac);
    // level block: regressors, fixed, dependent last; all lagged once
    CHECK(fit.level_series == std::vector<std::string>{"X1", "X2", "X3", "X4", "DPOL", "Y"});
    CHECK(fit.fit.names[fit.level_indices.back()] == "Y(-1)");
    CHECK(fit.fit.names[fit.dependent_level_index] == "Y(-1)");
    CHECK(*fit.phi("X1") == fit.fit.coefficients[fit.level_indices[0]]);
    CHECK_FALSE(fit.phi("nothing").has_value());
    CHECK(fit.fit.index_of("C") == std::nullopt);

    // repeated searches are bit-identical
    const auto again = ardl_search(spec, data);
    CHECK(again.orders == fit.orders);
    CHECK(again.fit.coefficients == fit.fit.coefficients);
}

TEST_CASE("case III adds an intercept") {
    Rng rng(3);
    const auto data = sim::cointegrated_pair(rng, 150);
    auto spec = pair_spec(2, 1);
    spec.deterministic = BoundsCase::III;
    const auto fit = ardl_search(spec, data);
    CHECK(fit.fit.index_of("C").has_value());
    spec.deterministic = BoundsCase::IV;
    CHECK_THROWS_AS(ardl_search(spec, data), UsageError);
}

TEST_CASE("degenerate grid and spec validation") {
    Rng rng(11);
    const auto data = sim::cointegrated_pair(rng, 100);
    const auto fit = ardl_search(pair_spec(1, 0), data);
    CHECK(fit.trace.size() == 1);
    CHECK(fit.orders == ArdlOrders{1, {0}});
    CHECK(fit.orders.label() == "ARDL(1, 0)");
    CHECK(fit.fit.names == std::vector<std::string>{"X(-1)", "Y(-1)"});

    CHECK_THROWS_AS(ardl_search(pair_spec(0, 1), data), EmptyGrid);
    ArdlSpec none;
    none.dependent = "Y";
    CHECK_THROWS_AS(ardl_search(none, data), UsageError);
    auto dup = pair_spec(2, 1);
    dup.regressors.push_back({"X", 0});
    CHECK_THROWS_AS(ardl_search(dup, data), UsageError);
    CHECK_THROWS(ardl_search(pair_spec(60, 60), data));
}

TEST_CASE("ARDL(2,1) is recovered under SIC") {
    Rng rng(424242);
    int hits = 0;
    for (int r = 0; r < 100; ++r) {
        const auto fit = ardl_search(pair_spec(4, 4), sim::ardl21(rng, 300));
        hits += fit.orders == ArdlOrders{2, {1}};
    }
    CHECK(hits >= 80);
}

TEST_CASE("reference bounds verdicts") {
    const auto a = bounds_verdict(4.3927, 5, BoundsCase::I);
    CHECK(a.summary() == "cointegrated at 1%");
    for (const auto& l : a.levels) CHECK(l.outcome == BoundsOutcome::Cointegrated);
    const auto b = bounds_verdict(4.2055, 5, BoundsCase::I);
    CHECK(b.levels[1].outcome == BoundsOutcome::Cointegrated);
    CHECK(b.levels[2].outcome == BoundsOutcome::Inconclusive);
    CHECK(b.summary() == "cointegrated at 5%");
    const auto c = bounds_verdict(1.0, 5, BoundsCase::I);
    for (const auto& l : c.levels) CHECK(l.outcome == BoundsOutcome::NotCointegrated);
    CHECK(c.summary() == "no cointegration");

    const auto t = *BoundsTable::embedded().lookup(BoundsCase::I, 5);
    const double expect[3][3] = {{0.10, 1.81, 2.93}, {0.05, 2.14, 3.34}, {0.01, 2.82, 4.21}};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(t[i].significance == expect[i][0]);
        CHECK(t[i].lower == expect[i][1]);
        CHECK(t[i].upper == expect[i][2]);
    }
    CHECK_THROWS_AS(bounds_verdict(3.0, 4, BoundsCase::I), MissingBoundsTable);
    CHECK_THROWS_AS(bounds_verdict(3.0, 5, BoundsCase::III), MissingBoundsTable);
}

TEST_CASE("bounds outcomes are monotone in F and in significance") {
    auto rank = [](BoundsOutcome o) { return o == BoundsOutcome::Cointegrated ? 2 : o == BoundsOutcome::Inconclusive ? 1 : 0; };
    std::array<int, 3> prev{0, 0, 0};
    for (double f = 0.0; f <= 6.0; f += 0.01) {
        const auto v = bounds_verdict(f, 5, BoundsCase::I);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(rank(v.levels[i].outcome) >= prev[i]);
            prev[i] = rank(v.levels[i].outcome);
            CHECK(v.levels[i].critical.lower < v.levels[i].critical.upper);
        }
        if (v.levels[2].outcome == BoundsOutcome::Cointegrated) CHECK(v.levels[1].outcome == BoundsOutcome::Cointegrated);
        if (v.levels[1].outcome == BoundsOutcome::Cointegrated) CHECK(v.levels[0].outcome == BoundsOutcome::Cointegrated);
    }
}

TEST_CASE("user bounds tables") {
    const auto t = BoundsTable::parse("case,k,level,lower,upper\nIII,1,10%,4.04,4.78\nIII,1,5%,4.94,5.73\n"
                                      "III,1,0.01,6.84,7.84\nI,5,5%,9.0,9.5\n");
    const auto v = bounds_verdict(5.0, 1, BoundsCase::III, &t);
    CHECK(v.levels[0].outcome == BoundsOutcome::Cointegrated);
    CHECK(v.levels[1].outcome == BoundsOutcome::Inconclusive);
    CHECK(v.levels[2].outcome == BoundsOutcome::NotCointegrated);
    // an incomplete user entry leaves the embedded table in charge
    CHECK(bounds_verdict(4.3927, 5, BoundsCase::I, &t).levels[1].critical.upper == 3.34);
    const auto full = BoundsTable::parse("case,k,level,lower,upper\nI,5,10%,8,9\nI,5,5%,9.0,9.5\nI,5,1%,10,11\n");
    const auto w = bounds_verdict(4.3927, 5, BoundsCase::I, &full);
    CHECK(w.levels[1].critical.upper == 9.5);
    CHECK(w.summary() == "no cointegration");
    CHECK_THROWS_AS(BoundsTable::parse("case,k,level,lower,upper\nI,5,5%,3.0,2.0\n"), ParseError);
    CHECK_THROWS_AS(BoundsTable::parse("case,k,level,lower,upper\nI,x,5%,1,2\n"), ParseError);
    CHECK_THROWS_AS(BoundsTable::parse("case,k,level,lower,upper\nI,5,7%,1,2\n"), ParseError);
    CHECK_THROWS_AS(BoundsTable::parse("case,k,level\nI,5,5%\n"), ParseError);
    CHECK_THROWS_AS(BoundsTable::load("/nonexistent/bounds.csv"), IoError);
}

TEST_CASE("bounds F test on a fit") {
    Rng rng(5);
    const auto data = sim::cointegrated_system(rng, 300, 4);
    const auto fit = ardl_search(system_spec(2, 2), data);
    const auto v = bounds_test(fit);
    CHECK(v.k == 5);
    REQUIRE(v.wald.has_value());
    CHECK(v.wald->df1 == 6);
    CHECK(v.f_statistic == v.wald->f);
    CHECK(v.f_statistic == doctest::Approx(wald_f(fit.fit, fit.level_indices).f));

    const auto classical = bounds_test(fit, nullptr, true);
    auto rs = fit.regression;
    rs.covariance = CovarianceSpec::classical();
    const auto cf = ols_fit(rs, data);
    CHECK(classical.f_statistic == doctest::Approx(wald_f(cf, fit.level_indices).f).epsilon(1e-10));
    CHECK(classical.f_statistic != v.f_statistic);
}

TEST_CASE("bounds F and multipliers under regressor rescaling") {
    Rng rng(6);
    auto data = sim::cointegrated_system(rng, 300, 4);
    auto spec = system_spec(2, 1);
    spec.covariance = CovarianceSpec::hac(4);
    const auto base = ardl_fit(spec, {2, {1, 1, 0, 0}}, data);
    Dataset scaled(data.frequency(), data.index());
    for (const auto& name : data.names()) {
        auto v = testing::to_vector(data.at(name).values());
        if (name == "X2")
            for (double& x : v) x *= 100.0;
        scaled.add(TimeSeries(name, data.frequency(), data.index(), v));
    }
    const auto moved = ardl_fit(spec, {2, {1, 1, 0, 0}}, scaled);
    CHECK(bounds_test(moved).f_statistic == doctest::Approx(bounds_test(base).f_statistic).epsilon(1e-9));
    CHECK(*moved.phi("X2") == doctest::Approx(*base.phi("X2") / 100.0).epsilon(1e-9));
    const auto lb = long_run(base), lm = long_run(moved);
    CHECK(lm[1].multiplier == doctest::Approx(lb[1].multiplier / 100.0).epsilon(1e-9));
    CHECK(lm[1].t_stat == doctest::Approx(lb[1].t_stat).epsilon(1e-8));
}

TEST_CASE("six-term level block is detected in cointegrated systems") {
    Rng rng(606);
    int above = 0;
    for (int r = 0; r < 50; ++r) {
        const auto fit = ardl_search(system_spec(2, 1), sim::cointegrated_system(rng, 300, 4));
        above += bounds_test(fit).f_statistic > 4.21;
    }
    CHECK(above >= 45);
}

TEST_CASE("reference long-run multipliers") {
    const std::vector<std::string> bist_names{"CDS", "EX", "CPI", "INT", "DPOL"};
    const double bist_phi[] = {-0.0140, -1.2780, -0.2261, -0.0584, -0.0882};
    const auto b = long_run_multipliers(bist_names, bist_phi, -0.1639);
    const double bist_expect[] = {-0.0855, -7.7974, -1.3817, -0.3586, -0.5380};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(b[i].name == bist_names[i]);
        CHECK(std::abs(b[i].multiplier - bist_expect[i]) <= 0.01);
        CHECK(std::isnan(b[i].std_error));
    }
    const std::vector<std::string> cds_names{"EX", "CPI", "INT", "DPOL"};
    const double cds_phi[] = {117.2774, 5.4331, 3.2827, 36.4096};
    const auto c = long_run_multipliers(cds_names, cds_phi, -0.4072);
    const double cds_expect[] = {288.0093, 13.3426, 8.0616, 89.4153};
    for (std::size_t i = 0; i < 4; ++i)
        CHECK((std::abs(c[i].multiplier - cds_expect[i]) <= 0.01 ||
               std::abs(c[i].multiplier - cds_expect[i]) <= 0.001 * std::abs(cds_expect[i])));
}

TEST_CASE("delta-method standard errors") {
    const std::vector<std::string> names{"A", "B"};
    const double phi[] = {0.6, 0.0};
    Matrix cov(3, 3);
    const double c[3][3] = {{0.04, 0.01, -0.005}, {0.01, 0.09, 0.002}, {-0.005, 0.002, 0.0025}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) cov(i, j) = c[i][j];
    const double dep = -0.3;
    const auto r = long_run_multipliers(names, phi, dep, &cov, 100.0);
    // gradient of -phi_i/dep: (-1/dep) wrt phi_i, phi_i/dep^2 wrt dep
    for (std::size_t i = 0; i < 2; ++i) {
        const double gi = -1.0 / dep, gd = phi[i] / (dep * dep);
        const double var = gi * gi * c[i][i] + 2.0 * gi * gd * c[i][2] + gd * gd * c[2][2];
        CHECK(r[i].multiplier * dep == doctest::Approx(-phi[i]));
        CHECK(r[i].std_error == doctest::Approx(std::sqrt(var)).epsilon(1e-12));
        if (r[i].std_error > 0) CHECK(r[i].t_stat == doctest::Approx(r[i].multiplier / r[i].std_error));
        CHECK(r[i].p_value == doctest::Approx(r[i].std_error > 0 ? 2.0 * t_sf(std::abs(r[i].t_stat), 100.0) : 1.0));
    }
    CHECK(r[1].multiplier == 0.0);
    CHECK(r[1].std_error == doctest::Approx(std::sqrt(c[1][1]) / 0.3));

    const double tiny[] = {1.0, 2.0};
    CHECK_THROWS_AS(long_run_multipliers(names, tiny, 1e-14), DegenerateDenominator);
    CHECK_THROWS_AS(long_run_multipliers(names, tiny, 0.0), DegenerateDenominator);
}

TEST_CASE("long-run identity on fitted models") {
    Rng rng(9);
    const auto fit = ardl_search(system_spec(3, 2), sim::cointegrated_system(rng, 300, 4));
    const auto lr = long_run(fit);
    REQUIRE(lr.size() == 5);
    const double dep = fit.fit.coefficients[fit.dependent_level_index];
    for (std::size_t i = 0; i < lr.size(); ++i) {
        CHECK(lr[i].name == fit.level_series[i]);
        CHECK(std::abs(lr[i].multiplier * dep + fit.fit.coefficients[fit.level_indices[i]]) < 1e-10);
        CHECK(lr[i].std_error > 0.0);
    }
    // true long-run coefficients 1, 1/2, 1/3, 1/4 and 0.5 for the dummy
    CHECK(std::abs(lr[0].multiplier - 1.0) < 0.25);
    CHECK(std::abs(lr[3].multiplier - 0.25) < 0.15);
}

TEST_CASE("ECT from a levels fit") {
    std::vector<double> x(20), y(20);
    for (std::size_t i = 0; i < 20; ++i) {
        x[i] = static_cast<double>(i * i % 7) + 0.5 * static_cast<double>(i);
        y[i] = 2.0 * x[i] + (i % 2 == 0 ? 0.1 : -0.1);
    }
    const auto data = testing::dataset({{"Y", y}, {"X", x}});
    auto spec = pair_spec(1, 1);
    RegressionSpec rs = levels_regression(spec, false);
    CHECK(rs.terms == std::vector<Term>{{"X"}});
    const auto levels = ols_fit(rs, data);
    const auto ect = ect_from_levels(levels);
    CHECK(ect.name() == "ECT");
    CHECK(ect.size() == levels.n);
    CHECK(ect.index() == data.index());
    // residuals recover the alternating pattern up to the projection on x
    double max_dev = 0.0;
    for (std::size_t i = 0; i < 20; ++i) {
        const double fitted = levels.coefficients[0] * x[i];
        CHECK(ect[i] == doctest::Approx(y[i] - fitted));
        max_dev = std::max(max_dev, std::abs(std::abs(ect[i]) - 0.1));
    }
    CHECK(max_dev < 0.02);

    // y = 2x exactly: zero residual series
    for (std::size_t i = 0; i < 20; ++i) y[i] = 2.0 * x[i];
    const auto exact = ect_from_levels(ols_fit(rs, testing::dataset({{"Y", y}, {"X", x}})));
    for (double e : exact.values()) CHECK(std::abs(e) < 1e-12);
}

TEST_CASE("ECM structure and errors") {
    Rng rng(21);
    const auto data = sim::cointegrated_pair(rng, 200);
    auto spec = pair_spec(2, 1);
    const auto ect = ect_from_levels(ols_fit(levels_regression(spec), data));
    const auto e = ecm_fit(spec, data, ect);
    CHECK(e.fit.names == std::vector<std::string>{"D(Y(-1))", "D(X)", "ECT(-1)"});
    CHECK(e.ect_index == 2);
    CHECK(e.lambda == e.fit.coefficients[2]);
    CHECK(e.lambda_se == e.fit.std_errors[2]);
    CHECK(e.valid == (e.lambda_p < 0.05 && e.lambda > -1.0 && e.lambda < 0.0));

    spec.deterministic = BoundsCase::III;
    CHECK(ecm_fit(spec, data, ect).fit.index_of("C").has_value());

    const TimeSeries zero("ECT", Frequency::Monthly, data.index(), std::vector<double>(200, 0.0));
    CHECK_THROWS_AS(ecm_fit(pair_spec(2, 1), data, zero), RankDeficient);

    // a residual series may start later (the sample shrinks) but must start inside
    // the data index and cover every period it is needed for
    const auto vals = testing::to_vector(ect.values());
    std::vector<Period> early{{1999, 12, 0}};
    for (const auto& p : data.index()) early.push_back(p);
    early.pop_back();
    const TimeSeries before("ECT", Frequency::Monthly, early, vals);
    CHECK_THROWS_AS(ecm_fit(pair_spec(2, 1), data, before), MisalignedResiduals);
    const TimeSeries shorter("ECT", Frequency::Monthly, {data.index().begin(), data.index().begin() + 120},
                             {vals.begin(), vals.begin() + 120});
    CHECK_THROWS_AS(ecm_fit(pair_spec(2, 1), data, shorter), MisalignedResiduals);
    const TimeSeries daily("ECT", Frequency::Daily, sim::make_index(200, Frequency::Daily), vals);
    CHECK_THROWS_AS(ecm_fit(pair_spec(2, 1), data, daily), MisalignedResiduals);
    const TimeSeries later("ECT", Frequency::Monthly, {data.index().begin() + 50, data.index().end()},
                           {vals.begin() + 50, vals.end()});
    const auto l = ecm_fit(pair_spec(2, 1), data, later);
    CHECK(l.fit.n == 149);
}

TEST_CASE("adjustment interpretation") {
    CHECK(adjustment_interpretation(-0.2018) == "corrects 20.18% of previous-period disequilibrium");
    CHECK(adjustment_interpretation(-0.3731) == "corrects 37.31% of previous-period disequilibrium");
    CHECK(adjustment_interpretation(-1.2).find("overshooting") != std::string::npos);
    CHECK(adjustment_interpretation(0.1).rfind("no correction", 0) == 0);
}

TEST_CASE("ECM recovers the adjustment speed") {
    Rng rng(300);
    double sum = 0.0;
    int valid = 0;
    for (int r = 0; r < 100; ++r) {
        const auto data = sim::cointegrated_pair(rng, 300, -0.3);
        const auto spec = pair_spec(1, 1);
        const auto e = ecm_fit(spec, data, ect_from_levels(ols_fit(levels_regression(spec), data)));
        sum += e.lambda;
        valid += e.valid;
        if (e.valid) CHECK((e.lambda > -1.0 && e.lambda < 0.0));
    }
    CHECK(std::abs(sum / 100.0 + 0.3) <= 0.07);
    CHECK(valid >= 90);
}

TEST_CASE("bounds case names") {
    CHECK(parse_bounds_case("I") == BoundsCase::I);
    CHECK(parse_bounds_case("case_iii") == BoundsCase::III);
    CHECK(parse_bounds_case("3") == BoundsCase::III);
    CHECK(to_string(BoundsCase::III) == "III");
    CHECK_THROWS_AS(parse_bounds_case("VI"), UsageError);
}
