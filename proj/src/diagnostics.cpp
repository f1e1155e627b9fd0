#include "tsecon/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tsecon/distributions.hpp"
#include "tsecon/error.hpp"
#include "tsecon/kernels.hpp"

namespace tsecon {

double durbin_watson(std::span<const double> residuals) {
    if (residuals.size() < 2) throw TooShort("Durbin-Watson needs at least 2 residuals");
    const double denom = kernels::sum_squares(residuals);
    if (!(denom > 0.0)) throw ZeroResiduals("Durbin-Watson undefined for zero residuals");
    const std::size_t n = residuals.size();
    return kernels::squared_distance(residuals.subspan(1), residuals.first(n - 1)) / denom;
}

namespace {

bool residuals_vanish(const Design& design, const OlsFit& fit) {
    const double scale = kernels::sum_squares(design.y);
    return fit.ssr <= 1e-24 * scale;
}

bool is_constant(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double e) { return e == v[0]; });
}

bool same_column(std::span<const double> a, std::span<const double> b) {
    return std::equal(a.begin(), a.end(), b.begin());
}

// n·R² from regressing `dependent` on `aux`. R² is centered when `centered`.
double lm_statistic(const Matrix& aux, std::span<const double> dependent, bool centered,
                    const std::vector<std::string>& names, std::size_t first_row) {
    Design d;
    d.x = aux;
    d.y.assign(dependent.begin(), dependent.end());
    d.names = names;
    d.intercept = centered;
    d.first_row = first_row;
    const double n = static_cast<double>(d.y.size());
    double tss;
    if (centered) {
        tss = kernels::central_moments(d.y, kernels::sum(d.y) / n).m2;
    } else {
        tss = kernels::sum_squares(d.y);
    }
    if (!(tss > 0.0)) return 0.0;
    const OlsFit aux_fit = fit_design(d, CovarianceSpec::classical());
    return n * std::clamp(1.0 - aux_fit.ssr / tss, 0.0, 1.0);
}

// Non-constant columns of the original design.
std::vector<std::size_t> varying_columns(const Design& design) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < design.k(); ++j)
        if (!is_constant(design.x.col(j))) cols.push_back(j);
    return cols;
}

LmTest finish(double stat, std::size_t df) {
    return {stat, df, chi2_sf(stat, static_cast<double>(df))};
}

}  // namespace

LmTest breusch_godfrey(const Design& design, const OlsFit& fit, std::size_t lags) {
    if (lags == 0) throw UsageError("Breusch-Godfrey needs at least one lag");
    const std::size_t n = fit.n;
    if (lags >= n - fit.k) throw TooFewObservations("too many Breusch-Godfrey lags for the sample");
    if (residuals_vanish(design, fit)) return {0.0, lags, 1.0};
    Matrix aux = design.x;
    std::vector<std::string> names = design.names;
    std::vector<double> lagged(n);
    for (std::size_t l = 1; l <= lags; ++l) {
        for (std::size_t t = 0; t < n; ++t) lagged[t] = t >= l ? fit.residuals[t - l] : 0.0;
        aux.append_col(lagged);
        names.push_back("RESID(-" + std::to_string(l) + ")");
    }
    return finish(lm_statistic(aux, fit.residuals, design.intercept, names, design.first_row), lags);
}

LmTest breusch_godfrey(const OlsFit& fit, const RegressionSpec& spec, const Dataset& data,
                       std::size_t lags) {
    return breusch_godfrey(build_design(spec, data), fit, lags);
}

LmTest breusch_pagan_godfrey(const Design& design, const OlsFit& fit) {
    const auto cols = varying_columns(design);
    if (cols.empty()) throw UsageError("Breusch-Pagan-Godfrey needs a non-constant regressor");
    if (residuals_vanish(design, fit)) return {0.0, cols.size(), 1.0};
    Matrix aux = design.x.select_cols(cols);
    std::vector<std::string> names;
    for (std::size_t c : cols) names.push_back(design.names[c]);
    aux.append_col(std::vector<double>(fit.n, 1.0));
    names.emplace_back("C");
    std::vector<double> e2(fit.n);
    for (std::size_t t = 0; t < fit.n; ++t) e2[t] = fit.residuals[t] * fit.residuals[t];
    return finish(lm_statistic(aux, e2, true, names, design.first_row), cols.size());
}

LmTest breusch_pagan_godfrey(const OlsFit& fit, const RegressionSpec& spec, const Dataset& data) {
    return breusch_pagan_godfrey(build_design(spec, data), fit);
}

LmTest white_test(const Design& design, const OlsFit& fit) {
    const auto cols = varying_columns(design);
    if (cols.empty()) throw UsageError("White test needs a non-constant regressor");
    const std::size_t n = fit.n;
    Matrix aux;
    std::vector<std::string> names;
    auto try_add = [&](std::span<const double> v, std::string name) {
        if (is_constant(v)) return;
        for (std::size_t c = 0; c < aux.cols(); ++c)
            if (same_column(aux.col(c), v)) return;
        aux.append_col(v);
        names.push_back(std::move(name));
    };
    for (std::size_t c : cols) try_add(design.x.col(c), design.names[c]);
    std::vector<double> prod(n);
    for (std::size_t a = 0; a < cols.size(); ++a) {
        for (std::size_t b = a; b < cols.size(); ++b) {
            const auto xa = design.x.col(cols[a]);
            const auto xb = design.x.col(cols[b]);
            for (std::size_t t = 0; t < n; ++t) prod[t] = xa[t] * xb[t];
            try_add(prod, design.names[cols[a]] + "*" + design.names[cols[b]]);
        }
    }
    const std::size_t df = aux.cols();
    if (residuals_vanish(design, fit)) return {0.0, df, 1.0};
    aux.append_col(std::vector<double>(n, 1.0));
    names.emplace_back("C");
    std::vector<double> e2(n);
    for (std::size_t t = 0; t < n; ++t) e2[t] = fit.residuals[t] * fit.residuals[t];
    return finish(lm_statistic(aux, e2, true, names, design.first_row), df);
}

LmTest white_test(const OlsFit& fit, const RegressionSpec& spec, const Dataset& data) {
    return white_test(build_design(spec, data), fit);
}

DiagnosticsReport diagnose(const Design& design, const OlsFit& fit, const DiagnosticsRequest& request) {
    DiagnosticsReport r;
    if (request.durbin_watson && std::isfinite(fit.durbin_watson)) r.durbin_watson = fit.durbin_watson;
    if (request.bg_lags > 0) r.bg_lm = breusch_godfrey(design, fit, request.bg_lags);
    if (request.bpg) r.bpg = breusch_pagan_godfrey(design, fit);
    if (request.white) r.white = white_test(design, fit);
    return r;
}

double cusum_constant(CusumLevel level) noexcept {
    switch (level) {
        case CusumLevel::Pct1: return 1.143;
        case CusumLevel::Pct5: return 0.948;
        case CusumLevel::Pct10: return 0.850;
    }
    return 0.948;
}

CusumResult cusum(const Design& design, CusumLevel level) {
    const std::size_t n = design.n();
    const std::size_t k = design.k();
    if (n <= k + 1) throw TooFewObservations("CUSUM needs more than k + 1 observations");

    Matrix r(k, k);
    std::vector<double> z(k, 0.0);
    std::vector<double> col_norm2(k, 0.0);
    std::vector<double> row(k);

    // Givens rotations fold one observation into (R, z = Q'y).
    auto add_row = [&](std::size_t t) {
        for (std::size_t j = 0; j < k; ++j) {
            row[j] = design.x(t, j);
            col_norm2[j] += row[j] * row[j];
        }
        double yv = design.y[t];
        for (std::size_t j = 0; j < k; ++j) {
            if (row[j] == 0.0) continue;
            const double h = std::hypot(r(j, j), row[j]);
            const double c = r(j, j) / h;
            const double s = row[j] / h;
            for (std::size_t m = j; m < k; ++m) {
                const double rv = r(j, m);
                r(j, m) = c * rv + s * row[m];
                row[m] = -s * rv + c * row[m];
            }
            const double zv = z[j];
            z[j] = c * zv + s * yv;
            yv = -s * zv + c * yv;
        }
    };

    auto deficient_column = [&]() -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < k; ++j)
            if (!(std::abs(r(j, j)) > 1e-10 * std::sqrt(col_norm2[j]))) return j;
        return std::nullopt;
    };
    // The recursion starts at the first prefix with full column rank, which is
    // later than k when a regressor (typically a dummy) is zero early on.
    std::size_t start = 0;
    while (start < k) add_row(start++);
    while (start < n && deficient_column()) add_row(start++);
    if (const auto j = deficient_column()) {
        throw RankDeficient("CUSUM recursion never reaches full rank (regressor " + design.names[*j] + ")", *j);
    }
    if (n <= start + 1) {
        throw TooFewObservations("CUSUM needs at least two recursive residuals after the first full-rank block of " +
                                 std::to_string(start) + " rows");
    }

    CusumResult out;
    out.constant = cusum_constant(level);
    std::vector<double> b(k), v(k);
    for (std::size_t t = start; t < n; ++t) {
        // b = R^{-1} z
        for (std::size_t i = k; i-- > 0;) {
            double s = z[i];
            for (std::size_t m = i + 1; m < k; ++m) s -= r(i, m) * b[m];
            b[i] = s / r(i, i);
        }
        // v = R^{-T} x_t, so x'(X'X)^{-1}x = ||v||²
        double pred = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            double s = design.x(t, i);
            for (std::size_t m = 0; m < i; ++m) s -= r(m, i) * v[m];
            v[i] = s / r(i, i);
            pred += design.x(t, i) * b[i];
        }
        const double f = 1.0 + std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
        out.recursive_residuals.push_back((design.y[t] - pred) / std::sqrt(f));
        out.periods.push_back(design.periods[t]);
        add_row(t);
    }

    const std::size_t m = n - start;
    const double sqrt_m = std::sqrt(static_cast<double>(m));
    out.sigma = std::sqrt(kernels::sum_squares(out.recursive_residuals) / static_cast<double>(m));
    // Exact fits leave only rounding noise in w; treat that as a zero path.
    const double y_scale = std::sqrt(kernels::sum_squares(design.y) / static_cast<double>(n));
    const bool degenerate = !(out.sigma > 1e-12 * y_scale);
    double running = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        running += out.recursive_residuals[i];
        const double w = degenerate ? 0.0 : running / out.sigma;
        const double bound = out.constant * (sqrt_m + 2.0 * static_cast<double>(i + 1) / sqrt_m);
        out.path.push_back(w);
        out.upper.push_back(bound);
        out.lower.push_back(-bound);
        if (std::abs(w) > bound && out.stable) {
            out.stable = false;
            out.first_crossing = out.periods[i];
        }
    }
    return out;
}

CusumResult cusum(const RegressionSpec& spec, const Dataset& data, CusumLevel level) {
    return cusum(build_design(spec, data), level);
}

}  // namespace tsecon
