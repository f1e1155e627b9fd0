#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsecon/dataio.hpp"
#include "tsecon/linalg.hpp"

namespace tsecon {

/// One regressor: a dataset column at a lag, optionally first-differenced.
/// With `differenced` set the value at row t is x[t−lag] − x[t−lag−1].
struct Term {
    std::string series;
    std::size_t lag = 0;
    bool differenced = false;

    /// Rows of presample history this term consumes.
    [[nodiscard]] std::size_t presample() const noexcept { return lag + (differenced ? 1 : 0); }
    /// "CDS(-1)", "D(EX)", "D(BIST(-2))"
    [[nodiscard]] std::string label() const;

    bool operator==(const Term&) const = default;
};

/// Inverse of Term::label(): "X", "X(-2)", "D(X)", "D(X(-1))". Throws UsageError.
Term parse_term(std::string_view label);

enum class CovarianceKind { Classical, WhiteHc1, Hac };

struct CovarianceSpec {
    CovarianceKind kind = CovarianceKind::Classical;
    /// HAC only; nullopt selects floor(4 (n/100)^{2/9}).
    std::optional<std::size_t> bandwidth;

    static CovarianceSpec classical() { return {}; }
    static CovarianceSpec white() { return {CovarianceKind::WhiteHc1, std::nullopt}; }
    static CovarianceSpec hac(std::optional<std::size_t> bw = std::nullopt) {
        return {CovarianceKind::Hac, bw};
    }
};

std::string to_string(const CovarianceSpec& c);
/// "classical" | "white" | "hac" | "hac:<bandwidth>"
CovarianceSpec parse_covariance(std::string_view text);

struct RegressionSpec {
    Term dependent;
    std::vector<Term> terms;
    bool intercept = true;
    /// Linear trend equal to the 1-based dataset row number.
    bool trend = false;
    CovarianceSpec covariance;
    /// First dataset row of the effective sample; raised to the presample
    /// requirement when smaller. Used to put competing models on one sample.
    std::size_t sample_start = 0;
};

/// Numeric design: y, X, column labels and the periods of each row.
struct Design {
    Matrix x;
    std::vector<double> y;
    std::vector<std::string> names;
    std::vector<Period> periods;
    Frequency frequency = Frequency::Monthly;
    bool intercept = false;
    std::size_t first_row = 0;  ///< dataset row of the first observation

    [[nodiscard]] std::size_t n() const noexcept { return y.size(); }
    [[nodiscard]] std::size_t k() const noexcept { return x.cols(); }
};

/// Builds the design; columns are the terms in order, then "C", then "@TREND".
/// Throws UsageError on duplicate terms or unknown series and
/// TooFewObservations when the effective sample does not exceed the column count.
Design build_design(const RegressionSpec& spec, const Dataset& data);

struct OlsFit {
    std::vector<std::string> names;
    std::vector<double> coefficients;
    std::vector<double> std_errors;
    std::vector<double> t_stats;
    std::vector<double> p_values;
    std::vector<double> residuals;
    std::vector<Period> periods;  ///< period of each residual
    Frequency frequency = Frequency::Monthly;
    double r_squared = 0.0;
    bool centered_r_squared = true;  ///< false for no-intercept models
    double adj_r_squared = 0.0;
    double ssr = 0.0;
    double sigma = 0.0;  ///< sqrt(SSR/(n−k))
    double log_likelihood = 0.0;
    double durbin_watson = 0.0;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix cov;
    CovarianceSpec covariance;
    std::size_t hac_bandwidth = 0;  ///< bandwidth actually used (HAC only)
    bool intercept = false;

    [[nodiscard]] std::size_t df_resid() const noexcept { return n - k; }
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const noexcept;
};

OlsFit fit_design(const Design& design, const CovarianceSpec& covariance);
OlsFit ols_fit(const RegressionSpec& spec, const Dataset& data);

std::size_t automatic_bandwidth(std::size_t n);

/// s² (X'X)^{-1}
Matrix classical_cov(const Matrix& xtx_inv, double sigma2);
/// HC1: n/(n−k) (X'X)^{-1} X' diag(e²) X (X'X)^{-1}
Matrix white_cov(const Matrix& x, std::span<const double> residuals, const Matrix& xtx_inv);
/// Newey–West with Bartlett weights 1 − l/(L+1); bandwidth 0 gives HC0.
Matrix hac_cov(const Matrix& x, std::span<const double> residuals, const Matrix& xtx_inv,
               std::size_t bandwidth);

struct WaldResult {
    double f = 0.0;
    std::size_t df1 = 0;
    std::size_t df2 = 0;
    double p = 1.0;
};

/// Joint test that the coefficients at `restricted` are all zero, using the
/// fit's own covariance matrix.
WaldResult wald_f(const OlsFit& fit, std::span<const std::size_t> restricted);

enum class InfoCriterion { Aic, Sic };

std::string_view to_string(InfoCriterion ic) noexcept;
InfoCriterion parse_criterion(std::string_view text);

/// Per-observation criterion from the Gaussian log-likelihood:
/// AIC = −2ℓ/n + 2k/n, SIC = −2ℓ/n + k·log(n)/n.
double information_criterion(double log_likelihood, std::size_t n, std::size_t k, InfoCriterion ic);
inline double information_criterion(const OlsFit& fit, InfoCriterion ic) {
    return information_criterion(fit.log_likelihood, fit.n, fit.k, ic);
}

/// Significance stars: *** p<0.01, ** p<0.05, * p<0.10.
std::string significance_stars(double p);

}  // namespace tsecon
