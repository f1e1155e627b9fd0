#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "tsecon/dataio.hpp"
#include "tsecon/regression.hpp"

namespace tsecon {

enum class Deterministic { None, Constant, ConstantTrend };

std::string_view to_string(Deterministic d) noexcept;
/// "none" | "const" | "trend" (also "constant", "constant_trend", "ct")
Deterministic parse_deterministic(std::string_view text);

struct AdfSpec {
    Deterministic deterministic = Deterministic::Constant;
    std::size_t max_lag = 8;
    InfoCriterion criterion = InfoCriterion::Sic;
};

struct CriticalValues {
    double pct1 = 0.0;
    double pct5 = 0.0;
    double pct10 = 0.0;
};

struct AdfResult {
    double statistic = 0.0;  ///< t-ratio on the lagged level
    std::size_t chosen_lag = 0;
    double p_value = 1.0;
    CriticalValues critical;
    bool reject_1 = false;
    bool reject_5 = false;
    bool reject_10 = false;
    double durbin_watson = 0.0;
    std::size_t n_effective = 0;
    Deterministic deterministic = Deterministic::Constant;
    /// Criterion value for lags 0..max_lag on the common sample.
    std::vector<double> criterion_trace;
    OlsFit regression;  ///< test regression at the chosen lag, maximal sample
};

/// Augmented Dickey–Fuller test of a unit root. Lag length minimises the
/// criterion over 0..max_lag with every candidate estimated on the sample
/// trimmed for max_lag; the chosen lag is then re-estimated on its maximal sample.
AdfResult adf_test(const TimeSeries& s, const AdfSpec& spec = {});

/// Finite-sample Dickey–Fuller p-value for a tau statistic from a regression
/// with `n` effective observations (table interpolated linearly in 1/n).
double df_pvalue(double tau, std::size_t n, Deterministic deterministic);
CriticalValues df_critical_values(std::size_t n, Deterministic deterministic);

/// Smallest d <= max_d whose d-th difference rejects a unit root at 5%.
/// Throws Inconclusive when none does.
std::size_t integration_order(const TimeSeries& s, const AdfSpec& spec, std::size_t max_d);

}  // namespace tsecon
