#include "tsecon/unit_root.hpp"

#include <algorithm>
#include <cmath>

#include "tsecon/error.hpp"
#include "unit_root_tables.hpp"

namespace tsecon {

std::string_view to_string(Deterministic d) noexcept {
    switch (d) {
        case Deterministic::None: return "none";
        case Deterministic::Constant: return "const";
        case Deterministic::ConstantTrend: return "trend";
    }
    return "const";
}

Deterministic parse_deterministic(std::string_view text) {
    if (text == "none" || text == "n") return Deterministic::None;
    if (text == "const" || text == "constant" || text == "c") return Deterministic::Constant;
    if (text == "trend" || text == "constant_trend" || text == "ct") return Deterministic::ConstantTrend;
    throw UsageError("unknown deterministic case '" + std::string(text) + "' (none|const|trend)");
}

namespace {

using detail::kDfProbabilities;
using detail::kDfProbs;
using detail::kDfSampleSizes;
using detail::kDfSizes;

// Quantile curve at sample size n, interpolated linearly in 1/n.
std::array<double, kDfProbs> quantiles_at(std::size_t n, Deterministic det) {
    const auto& table = detail::kDfQuantiles[static_cast<std::size_t>(det)];
    const double nn = static_cast<double>(std::max<std::size_t>(n, 1));
    if (nn <= kDfSampleSizes.front()) return table.front();
    if (nn >= kDfSampleSizes.back()) return table.back();
    std::size_t hi = 1;
    while (kDfSampleSizes[hi] < nn) ++hi;
    const double inv_lo = 1.0 / kDfSampleSizes[hi - 1];
    const double inv_hi = 1.0 / kDfSampleSizes[hi];
    const double w = (1.0 / nn - inv_hi) / (inv_lo - inv_hi);
    std::array<double, kDfProbs> q{};
    for (std::size_t i = 0; i < kDfProbs; ++i) q[i] = w * table[hi - 1][i] + (1.0 - w) * table[hi][i];
    return q;
}

double quantile_at_probability(const std::array<double, kDfProbs>& q, double p) {
    const auto it = std::find_if(kDfProbabilities.begin(), kDfProbabilities.end(),
                                 [&](double v) { return std::abs(v - p) < 1e-12; });
    return q[static_cast<std::size_t>(it - kDfProbabilities.begin())];
}

}  // namespace

double df_pvalue(double tau, std::size_t n, Deterministic deterministic) {
    const auto q = quantiles_at(n, deterministic);
    const auto& p = kDfProbabilities;
    if (tau <= q.front()) {
        // log-linear tail beyond the smallest tabulated probability
        const double slope = std::log(p[1] / p[0]) / (q[1] - q[0]);
        return std::clamp(p[0] * std::exp(slope * (tau - q[0])), 0.0, p[0]);
    }
    if (tau >= q.back()) {
        const std::size_t L = kDfProbs - 1;
        const double slope = std::log((1.0 - p[L - 1]) / (1.0 - p[L])) / (q[L] - q[L - 1]);
        return std::clamp(1.0 - (1.0 - p[L]) * std::exp(-slope * (tau - q[L])), p[L], 1.0);
    }
    const std::size_t hi = static_cast<std::size_t>(std::upper_bound(q.begin(), q.end(), tau) - q.begin());
    const std::size_t lo = hi - 1;
    const double w = (tau - q[lo]) / (q[hi] - q[lo]);
    return p[lo] + w * (p[hi] - p[lo]);
}

CriticalValues df_critical_values(std::size_t n, Deterministic deterministic) {
    const auto q = quantiles_at(n, deterministic);
    return {quantile_at_probability(q, 0.01), quantile_at_probability(q, 0.05),
            quantile_at_probability(q, 0.10)};
}

namespace {

RegressionSpec adf_regression(const std::string& name, std::size_t lags, Deterministic det,
                              std::size_t sample_start) {
    RegressionSpec spec;
    spec.dependent = {name, 0, true};
    spec.terms.push_back({name, 1, false});
    for (std::size_t i = 1; i <= lags; ++i) spec.terms.push_back({name, i, true});
    spec.intercept = det != Deterministic::None;
    spec.trend = det == Deterministic::ConstantTrend;
    spec.sample_start = sample_start;
    return spec;
}

}  // namespace

AdfResult adf_test(const TimeSeries& s, const AdfSpec& spec) {
    const std::size_t n = s.size();
    if (n <= 10 || spec.max_lag >= n - 10) {
        throw TooShort("ADF on '" + s.name() + "' (" + std::to_string(n) +
                       " observations) needs max_lag < n - 10");
    }
    Dataset data(s.frequency(), s.index());
    data.add(s);

    AdfResult out;
    out.deterministic = spec.deterministic;
    double best = 0.0;
    for (std::size_t lag = 0; lag <= spec.max_lag; ++lag) {
        const OlsFit fit = ols_fit(adf_regression(s.name(), lag, spec.deterministic, spec.max_lag + 1), data);
        const double ic = information_criterion(fit, spec.criterion);
        out.criterion_trace.push_back(ic);
        if (lag == 0 || ic < best) {
            best = ic;
            out.chosen_lag = lag;
        }
    }

    out.regression = ols_fit(adf_regression(s.name(), out.chosen_lag, spec.deterministic, 0), data);
    out.statistic = out.regression.t_stats[0];
    out.n_effective = out.regression.n;
    out.durbin_watson = out.regression.durbin_watson;
    out.p_value = df_pvalue(out.statistic, out.n_effective, spec.deterministic);
    out.critical = df_critical_values(out.n_effective, spec.deterministic);
    out.reject_1 = out.statistic < out.critical.pct1;
    out.reject_5 = out.statistic < out.critical.pct5;
    out.reject_10 = out.statistic < out.critical.pct10;
    return out;
}

std::size_t integration_order(const TimeSeries& s, const AdfSpec& spec, std::size_t max_d) {
    for (std::size_t d = 0; d <= max_d; ++d) {
        const TimeSeries x = diff(s, d);
        if (adf_test(x, spec).reject_5) return d;
    }
    throw Inconclusive("'" + s.name() + "' does not reject a unit root up to difference order " +
                       std::to_string(max_d));
}

}  // namespace tsecon
