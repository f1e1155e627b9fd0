#include "tsecon/regression.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include "tsecon/diagnostics.hpp"
#include "tsecon/distributions.hpp"
#include "tsecon/error.hpp"
#include "tsecon/kernels.hpp"

namespace tsecon {

std::string Term::label() const {
    std::string base = series;
    if (lag > 0) base += "(-" + std::to_string(lag) + ")";
    return differenced ? "D(" + base + ")" : base;
}

Term parse_term(std::string_view label) {
    const std::string original(label);
    Term t;
    if (label.starts_with("D(") && label.ends_with(")")) {
        t.differenced = true;
        label = label.substr(2, label.size() - 3);
    }
    const std::size_t open = label.find("(-");
    if (open != std::string_view::npos) {
        if (!label.ends_with(")")) throw UsageError("bad term '" + original + "'");
        const std::string_view digits = label.substr(open + 2, label.size() - open - 3);
        if (digits.empty() ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw UsageError("bad lag in term '" + original + "'");
        }
        for (char c : digits) t.lag = t.lag * 10 + static_cast<std::size_t>(c - '0');
        label = label.substr(0, open);
    }
    if (label.empty() || label.find_first_of("() ") != std::string_view::npos) {
        throw UsageError("bad term '" + original + "'");
    }
    t.series = std::string(label);
    return t;
}

std::string to_string(const CovarianceSpec& c) {
    switch (c.kind) {
        case CovarianceKind::Classical: return "classical";
        case CovarianceKind::WhiteHc1: return "white";
        case CovarianceKind::Hac:
            return c.bandwidth ? "hac:" + std::to_string(*c.bandwidth) : std::string("hac");
    }
    return "classical";
}

CovarianceSpec parse_covariance(std::string_view text) {
    if (text == "classical") return CovarianceSpec::classical();
    if (text == "white" || text == "hc1") return CovarianceSpec::white();
    if (text == "hac") return CovarianceSpec::hac();
    if (text.starts_with("hac:")) {
        const std::string_view bw = text.substr(4);
        std::size_t v = 0;
        if (bw.empty() || !std::all_of(bw.begin(), bw.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw UsageError("bad HAC bandwidth in '" + std::string(text) + "'");
        }
        for (char c : bw) v = v * 10 + static_cast<std::size_t>(c - '0');
        return CovarianceSpec::hac(v);
    }
    throw UsageError("unknown covariance '" + std::string(text) + "' (classical|white|hac|hac:<L>)");
}

std::optional<std::size_t> OlsFit::index_of(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

namespace {

double term_value(std::span<const double> col, const Term& t, std::size_t row) {
    const double v = col[row - t.lag];
    return t.differenced ? v - col[row - t.lag - 1] : v;
}

}  // namespace

Design build_design(const RegressionSpec& spec, const Dataset& data) {
    for (std::size_t i = 0; i < spec.terms.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (spec.terms[i] == spec.terms[j]) {
                throw UsageError("duplicate regressor " + spec.terms[i].label());
            }
        }
    }
    std::size_t start = spec.dependent.presample();
    for (const auto& t : spec.terms) start = std::max(start, t.presample());
    start = std::max(start, spec.sample_start);

    const std::size_t total = data.observations();
    const std::size_t k = spec.terms.size() + (spec.intercept ? 1 : 0) + (spec.trend ? 1 : 0);
    if (start >= total || total - start <= k) {
        throw TooFewObservations("effective sample of " +
                                 std::to_string(start < total ? total - start : 0) +
                                 " observations does not exceed " + std::to_string(k) + " regressors");
    }
    const std::size_t n = total - start;

    Design d;
    d.frequency = data.frequency();
    d.intercept = spec.intercept;
    d.first_row = start;
    d.periods.assign(data.index().begin() + static_cast<std::ptrdiff_t>(start), data.index().end());
    d.x = Matrix(n, k);
    d.y.resize(n);
    const auto ycol = data.column(spec.dependent.series);
    for (std::size_t r = 0; r < n; ++r) d.y[r] = term_value(ycol, spec.dependent, start + r);

    std::size_t c = 0;
    for (const auto& t : spec.terms) {
        const auto col = data.column(t.series);
        auto dst = d.x.col(c++);
        for (std::size_t r = 0; r < n; ++r) dst[r] = term_value(col, t, start + r);
        d.names.push_back(t.label());
    }
    if (spec.intercept) {
        auto dst = d.x.col(c++);
        std::fill(dst.begin(), dst.end(), 1.0);
        d.names.emplace_back("C");
    }
    if (spec.trend) {
        auto dst = d.x.col(c++);
        for (std::size_t r = 0; r < n; ++r) dst[r] = static_cast<double>(start + r + 1);
        d.names.emplace_back("@TREND");
    }
    return d;
}

std::size_t automatic_bandwidth(std::size_t n) {
    return static_cast<std::size_t>(std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 2.0 / 9.0)));
}

Matrix classical_cov(const Matrix& xtx_inv, double sigma2) {
    Matrix v = xtx_inv;
    for (std::size_t j = 0; j < v.cols(); ++j)
        for (double& e : v.col(j)) e *= sigma2;
    return v;
}

namespace {

Matrix sandwich(const Matrix& bread, const Matrix& meat) {
    Matrix v = bread * meat * bread;
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const double s = 0.5 * (v(i, j) + v(j, i));
            v(i, j) = s;
            v(j, i) = s;
        }
    return v;
}

}  // namespace

Matrix white_cov(const Matrix& x, std::span<const double> residuals, const Matrix& xtx_inv) {
    Matrix v = hac_cov(x, residuals, xtx_inv, 0);
    const double n = static_cast<double>(x.rows());
    const double scale = n / (n - static_cast<double>(x.cols()));
    for (std::size_t j = 0; j < v.cols(); ++j)
        for (double& e : v.col(j)) e *= scale;
    return v;
}

Matrix hac_cov(const Matrix& x, std::span<const double> residuals, const Matrix& xtx_inv,
               std::size_t bandwidth) {
    const std::size_t n = x.rows();
    const std::size_t k = x.cols();
    // Score columns u_j = x_j ∘ e; the meat is Γ₀ + Σ_l w_l (Γ_l + Γ_l').
    Matrix scores(n, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto src = x.col(j);
        auto dst = scores.col(j);
        for (std::size_t t = 0; t < n; ++t) dst[t] = src[t] * residuals[t];
    }
    Matrix meat = gram(scores);
    const std::size_t max_lag = std::min(bandwidth, n - 1);
    for (std::size_t l = 1; l <= max_lag; ++l) {
        const double w = 1.0 - static_cast<double>(l) / static_cast<double>(bandwidth + 1);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                // Γ_l(i, j) = Σ_t u_{t,i} u_{t−l,j}
                const double g = kernels::dot(scores.col(i).subspan(l), scores.col(j).first(n - l));
                meat(i, j) += w * g;
                meat(j, i) += w * g;
            }
        }
    }
    return sandwich(xtx_inv, meat);
}

OlsFit fit_design(const Design& design, const CovarianceSpec& covariance) {
    const std::size_t n = design.n();
    const std::size_t k = design.k();
    if (n <= k) {
        throw TooFewObservations(std::to_string(n) + " observations for " + std::to_string(k) +
                                 " regressors");
    }
    std::optional<QrDecomposition> qr;
    try {
        qr.emplace(design.x);
    } catch (const RankDeficient& e) {
        throw RankDeficient("regressor " + design.names[e.column()] +
                                " is collinear with the preceding regressors",
                            e.column());
    }

    OlsFit fit;
    fit.names = design.names;
    fit.periods = design.periods;
    fit.frequency = design.frequency;
    fit.intercept = design.intercept;
    fit.n = n;
    fit.k = k;
    fit.covariance = covariance;
    fit.coefficients = qr->solve(design.y);

    fit.residuals = design.y;
    for (std::size_t j = 0; j < k; ++j) kernels::axpy(-fit.coefficients[j], design.x.col(j), fit.residuals);
    fit.ssr = kernels::sum_squares(fit.residuals);
    const double df = static_cast<double>(n - k);
    const double sigma2 = fit.ssr / df;
    fit.sigma = std::sqrt(sigma2);

    double tss;
    if (design.intercept) {
        const double ybar = kernels::sum(design.y) / static_cast<double>(n);
        tss = kernels::central_moments(design.y, ybar).m2;
        fit.centered_r_squared = true;
    } else {
        tss = kernels::sum_squares(design.y);
        fit.centered_r_squared = false;
    }
    fit.r_squared = tss > 0.0 ? std::clamp(1.0 - fit.ssr / tss, 0.0, 1.0) : 1.0;
    fit.adj_r_squared = 1.0 - (1.0 - fit.r_squared) * (static_cast<double>(n) - (design.intercept ? 1.0 : 0.0)) / df;
    const double nn = static_cast<double>(n);
    fit.log_likelihood = -0.5 * nn * (1.0 + std::log(2.0 * std::numbers::pi) + std::log(fit.ssr / nn));
    try {
        fit.durbin_watson = durbin_watson(fit.residuals);
    } catch (const ZeroResiduals&) {
        fit.durbin_watson = std::numeric_limits<double>::quiet_NaN();
    }

    const Matrix xtx_inv = qr->xtx_inverse();
    switch (covariance.kind) {
        case CovarianceKind::Classical:
            fit.cov = classical_cov(xtx_inv, sigma2);
            break;
        case CovarianceKind::WhiteHc1:
            fit.cov = white_cov(design.x, fit.residuals, xtx_inv);
            break;
        case CovarianceKind::Hac:
            fit.hac_bandwidth = covariance.bandwidth.value_or(automatic_bandwidth(n));
            fit.cov = hac_cov(design.x, fit.residuals, xtx_inv, fit.hac_bandwidth);
            break;
    }

    fit.std_errors.resize(k);
    fit.t_stats.resize(k);
    fit.p_values.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        const double se = std::sqrt(std::max(fit.cov(j, j), 0.0));
        const double b = fit.coefficients[j];
        fit.std_errors[j] = se;
        if (se > 0.0) {
            fit.t_stats[j] = b / se;
        } else {
            fit.t_stats[j] = b == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                      : std::copysign(std::numeric_limits<double>::infinity(), b);
        }
        fit.p_values[j] = std::isnan(fit.t_stats[j]) ? std::numeric_limits<double>::quiet_NaN()
                                                      : 2.0 * t_sf(std::abs(fit.t_stats[j]), df);
    }
    return fit;
}

OlsFit ols_fit(const RegressionSpec& spec, const Dataset& data) {
    return fit_design(build_design(spec, data), spec.covariance);
}

WaldResult wald_f(const OlsFit& fit, std::span<const std::size_t> restricted) {
    if (restricted.empty()) throw UsageError("Wald test needs at least one restriction");
    const std::size_t q = restricted.size();
    Matrix block(q, q);
    std::vector<double> rb(q);
    for (std::size_t a = 0; a < q; ++a) {
        if (restricted[a] >= fit.k) throw UsageError("Wald restriction index out of range");
        for (std::size_t b = 0; b < a; ++b) {
            if (restricted[a] == restricted[b]) throw UsageError("duplicate Wald restriction");
        }
        rb[a] = fit.coefficients[restricted[a]];
        for (std::size_t b = 0; b < q; ++b) block(a, b) = fit.cov(restricted[a], restricted[b]);
    }
    const auto inv = spd_inverse(block);
    if (!inv) throw SingularRestriction("restricted covariance block is not invertible");
    double quad = 0.0;
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) quad += rb[a] * (*inv)(a, b) * rb[b];
    WaldResult w;
    w.f = std::max(quad, 0.0) / static_cast<double>(q);
    w.df1 = q;
    w.df2 = fit.df_resid();
    w.p = f_sf(w.f, static_cast<double>(w.df1), static_cast<double>(w.df2));
    return w;
}

std::string_view to_string(InfoCriterion ic) noexcept { return ic == InfoCriterion::Aic ? "aic" : "sic"; }

InfoCriterion parse_criterion(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "aic") return InfoCriterion::Aic;
    if (lower == "sic" || lower == "bic" || lower == "sc") return InfoCriterion::Sic;
    throw UsageError("unknown information criterion '" + std::string(text) + "' (aic|sic)");
}

double information_criterion(double log_likelihood, std::size_t n, std::size_t k, InfoCriterion ic) {
    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(k);
    const double penalty = ic == InfoCriterion::Aic ? 2.0 * kk / nn : kk * std::log(nn) / nn;
    return -2.0 * log_likelihood / nn + penalty;
}

std::string significance_stars(double p) {
    if (std::isnan(p)) return "";
    if (p < 0.01) return "***";
    if (p < 0.05) return "**";
    if (p < 0.10) return "*";
    return "";
}

}  // namespace tsecon
