#include "tsecon/var_granger.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tsecon/distributions.hpp"
#include "tsecon/error.hpp"
#include "tsecon/kernels.hpp"

namespace tsecon {

RegressionSpec var_equation_spec(const Dataset& d, const std::string& dependent, std::size_t p,
                                 std::span<const VarExclusion> exclusions, const VarOptions& options) {
    (void)d.at(dependent);
    RegressionSpec spec;
    spec.dependent = {dependent, 0, false};
    spec.intercept = options.intercept;
    spec.covariance = options.covariance;
    spec.sample_start = std::max(options.sample_start, p);
    for (const auto& name : d.names()) {
        for (std::size_t lag = 1; lag <= p; ++lag) {
            const bool excluded = std::any_of(exclusions.begin(), exclusions.end(), [&](const VarExclusion& e) {
                return e.equation == dependent && e.series == name && e.lag == lag;
            });
            if (!excluded) spec.terms.push_back({name, lag, false});
        }
    }
    return spec;
}

namespace {

Matrix residual_covariance(const std::vector<const std::vector<double>*>& residuals) {
    const std::size_t m = residuals.size();
    const double n = static_cast<double>(residuals.front()->size());
    Matrix s(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = kernels::dot(*residuals[i], *residuals[j]) / n;
            s(i, j) = v;
            s(j, i) = v;
        }
    return s;
}

}  // namespace

VarFit var_fit(const Dataset& d, std::size_t p, std::span<const VarExclusion> exclusions,
               const VarOptions& options) {
    if (p == 0) throw UsageError("VAR lag order must be positive");
    if (d.observations() <= p) throw TooShort("dataset too short for a VAR(" + std::to_string(p) + ")");
    for (const auto& e : exclusions) {
        (void)d.at(e.equation);
        (void)d.at(e.series);
    }
    VarFit out;
    out.lag_order = p;
    out.names = d.names();
    std::vector<const std::vector<double>*> res;
    for (const auto& name : out.names) {
        VarEquation eq{name, var_equation_spec(d, name, p, exclusions, options), {}};
        eq.fit = ols_fit(eq.spec, d);
        out.equations.push_back(std::move(eq));
    }
    for (const auto& eq : out.equations) res.push_back(&eq.fit.residuals);
    out.n_effective = out.equations.front().fit.n;
    out.sigma = residual_covariance(res);
    return out;
}

LagSelectionTable lag_selection(const Dataset& d, std::size_t max_lag) {
    if (max_lag == 0) throw UsageError("lag selection needs max_lag >= 1");
    const std::size_t m = d.series_count();
    const double mm = static_cast<double>(m);
    LagSelectionTable table;
    table.series_count = m;
    std::vector<double> logdets;
    for (std::size_t lag = 0; lag <= max_lag; ++lag) {
        std::vector<OlsFit> fits;
        for (const auto& name : d.names()) {
            VarOptions opts;
            opts.sample_start = max_lag;
            fits.push_back(ols_fit(var_equation_spec(d, name, lag, {}, opts), d));
        }
        std::vector<const std::vector<double>*> res;
        for (const auto& f : fits) res.push_back(&f.residuals);
        const Matrix sigma = residual_covariance(res);
        const auto logdet = spd_log_determinant(sigma);
        if (!logdet) throw SingularCovariance("residual covariance is singular at lag " + std::to_string(lag));

        const std::size_t n = fits.front().n;
        const double nn = static_cast<double>(n);
        const double r = static_cast<double>(1 + m * lag);  // regressors per equation
        const double k = mm * r;
        LagSelectionRow row;
        row.lag = lag;
        row.log_likelihood = -0.5 * nn * (mm * (1.0 + std::log(2.0 * std::numbers::pi)) + *logdet);
        row.aic = -2.0 * row.log_likelihood / nn + 2.0 * k / nn;
        row.sc = -2.0 * row.log_likelihood / nn + k * std::log(nn) / nn;
        row.hq = -2.0 * row.log_likelihood / nn + 2.0 * k * std::log(std::log(nn)) / nn;
        row.fpe = std::exp(*logdet) * std::pow((nn + r) / (nn - r), mm);
        if (lag > 0) {
            row.lr = (nn - r) * (logdets.back() - *logdet);
            row.lr_pvalue = chi2_sf(*row.lr, mm * mm);
        }
        logdets.push_back(*logdet);
        table.n_effective = n;
        table.rows.push_back(row);
    }

    auto argmin = [&](auto member) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < table.rows.size(); ++i)
            if (table.rows[i].*member < table.rows[best].*member) best = i;
        return best;
    };
    table.star_fpe = argmin(&LagSelectionRow::fpe);
    table.star_aic = argmin(&LagSelectionRow::aic);
    table.star_sc = argmin(&LagSelectionRow::sc);
    table.star_hq = argmin(&LagSelectionRow::hq);
    table.star_lr = 0;
    for (std::size_t i = table.rows.size(); i-- > 1;) {
        if (*table.rows[i].lr_pvalue < 0.05) {
            table.star_lr = i;
            break;
        }
    }
    return table;
}

GrangerResult granger_test(const Dataset& d, const std::string& cause, const std::string& effect,
                           std::size_t p) {
    if (p == 0) throw UsageError("Granger test needs p >= 1");
    (void)d.at(cause);
    if (cause == effect) throw UsageError("cause and effect must differ");
    const RegressionSpec unrestricted = var_equation_spec(d, effect, p, {}, {});
    std::vector<VarExclusion> drop;
    for (std::size_t lag = 1; lag <= p; ++lag) drop.push_back({effect, cause, lag});
    const RegressionSpec restricted = var_equation_spec(d, effect, p, drop, {});

    const OlsFit u = ols_fit(unrestricted, d);
    const OlsFit r = ols_fit(restricted, d);
    GrangerResult g;
    g.cause = cause;
    g.effect = effect;
    g.df1 = p;
    g.df2 = u.df_resid();
    g.n_effective = u.n;
    g.f_statistic = std::max(0.0, (r.ssr - u.ssr) / static_cast<double>(p)) / (u.ssr / static_cast<double>(g.df2));
    g.p_value = f_sf(g.f_statistic, static_cast<double>(g.df1), static_cast<double>(g.df2));
    return g;
}

}  // namespace tsecon
