#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsecon/dataio.hpp"
#include "tsecon/linalg.hpp"
#include "tsecon/regression.hpp"

namespace tsecon {

/// Drops `series` at `lag` from the equation whose dependent is `equation`.
struct VarExclusion {
    std::string equation;
    std::string series;
    std::size_t lag = 0;
};

struct VarEquation {
    std::string dependent;
    RegressionSpec spec;
    OlsFit fit;
};

struct VarFit {
    std::size_t lag_order = 0;
    std::vector<std::string> names;
    std::vector<VarEquation> equations;
    Matrix sigma;  ///< E'E / n_effective
    std::size_t n_effective = 0;
};

struct VarOptions {
    bool intercept = true;
    CovarianceSpec covariance;
    /// First row of the common sample; raised to p when smaller.
    std::size_t sample_start = 0;
};

/// Regression spec of one VAR equation: each series at lags 1..p in dataset
/// column order, then the intercept.
RegressionSpec var_equation_spec(const Dataset& d, const std::string& dependent, std::size_t p,
                                 std::span<const VarExclusion> exclusions, const VarOptions& options);

/// Equation-by-equation OLS on the common sample that drops the first p rows.
VarFit var_fit(const Dataset& d, std::size_t p, std::span<const VarExclusion> exclusions = {},
               const VarOptions& options = {});

struct LagSelectionRow {
    std::size_t lag = 0;
    double log_likelihood = 0.0;
    std::optional<double> lr;  ///< undefined at lag 0
    std::optional<double> lr_pvalue;
    double fpe = 0.0;
    double aic = 0.0;
    double sc = 0.0;
    double hq = 0.0;
};

struct LagSelectionTable {
    std::vector<LagSelectionRow> rows;
    std::size_t n_effective = 0;
    std::size_t series_count = 0;
    std::size_t star_lr = 0;
    std::size_t star_fpe = 0;
    std::size_t star_aic = 0;
    std::size_t star_sc = 0;
    std::size_t star_hq = 0;
};

/// LR, FPE, AIC, SC and HQ for lags 0..max_lag, all on the sample trimmed
/// for max_lag. The LR star marks the largest lag whose sequential modified
/// LR test rejects at 5% (lag 0 when none does); other stars mark minima,
/// ties going to the smaller lag.
LagSelectionTable lag_selection(const Dataset& d, std::size_t max_lag);

struct GrangerResult {
    std::string cause;
    std::string effect;
    double f_statistic = 0.0;
    std::size_t df1 = 0;
    std::size_t df2 = 0;
    double p_value = 1.0;
    std::size_t n_effective = 0;
};

/// SSR-form F test that the p lags of `cause` can be dropped from the
/// `effect` equation of a VAR(p) over every series in `d`.
GrangerResult granger_test(const Dataset& d, const std::string& cause, const std::string& effect,
                           std::size_t p);

}  // namespace tsecon
