#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsecon/dataio.hpp"
#include "tsecon/regression.hpp"

namespace tsecon {

/// Deterministic cases of the bounds-testing framework. Case I has neither
/// intercept nor trend; Case III has an unrestricted intercept.
enum class BoundsCase { I = 1, II, III, IV, V };

std::string_view to_string(BoundsCase c) noexcept;
BoundsCase parse_bounds_case(std::string_view text);

struct DynamicRegressor {
    std::string name;
    std::size_t max_lag = 0;
};

/// ARDL in conditional error-correction form:
///
///   Δy_t = Σ_{i=1}^{p−1} δ_i Δy_{t−i} + Σ_j Σ_{i=0}^{q_j−1} θ_ji Δx_{j,t−i}
///          + Σ_j φ_j x_{j,t−1} + Σ_f φ_f f_{t−1} + φ_y y_{t−1} + ε_t
///
/// p ranges over 1..dependent_max_lag and each q_j over 0..max_lag (levels-ARDL
/// lag orders). Fixed regressors enter only the level block.
struct ArdlSpec {
    std::string dependent;
    std::size_t dependent_max_lag = 1;
    std::vector<DynamicRegressor> regressors;
    std::vector<std::string> fixed;
    BoundsCase deterministic = BoundsCase::I;
    InfoCriterion criterion = InfoCriterion::Sic;
    CovarianceSpec covariance = CovarianceSpec::hac();
};

struct ArdlOrders {
    std::size_t p = 1;
    std::vector<std::size_t> q;

    [[nodiscard]] std::size_t total() const noexcept;
    /// "ARDL(2, 1, 0)"
    [[nodiscard]] std::string label() const;
    bool operator==(const ArdlOrders&) const = default;
};

struct CriterionTraceEntry {
    ArdlOrders orders;
    double value = 0.0;
};

struct ArdlFit {
    ArdlSpec spec;
    ArdlOrders orders;
    RegressionSpec regression;
    Design design;
    OlsFit fit;
    /// Design columns of the level block: regressors, fixed, then the dependent.
    std::vector<std::size_t> level_indices;
    std::vector<std::string> level_series;
    std::size_t dependent_level_index = 0;
    std::vector<std::size_t> short_run_indices;
    std::vector<CriterionTraceEntry> trace;

    /// Spec whose max lags equal the chosen orders (for the ECM stage).
    [[nodiscard]] ArdlSpec chosen_spec() const;
    /// Level coefficient φ for a series; nullopt when absent.
    [[nodiscard]] std::optional<double> phi(std::string_view series) const;
};

/// Regression for fixed orders. `sample_start` forces a later first row.
RegressionSpec ardl_regression(const ArdlSpec& spec, const ArdlOrders& orders, std::size_t sample_start = 0);

/// Estimates one ARDL at fixed orders on its maximal sample.
ArdlFit ardl_fit(const ArdlSpec& spec, const ArdlOrders& orders, const Dataset& data);

/// Exhaustive search over p in 1..P and each q_j in 0..Q_j on the common
/// sample; ties go to the smaller total lag count, then lexicographic order.
/// The winner is re-estimated on its maximal sample with spec.covariance.
ArdlFit ardl_search(const ArdlSpec& spec, const Dataset& data);

enum class BoundsOutcome { Cointegrated, Inconclusive, NotCointegrated };
std::string_view to_string(BoundsOutcome o) noexcept;

struct BoundsCritical {
    double significance = 0.0;  ///< 0.10, 0.05 or 0.01
    double lower = 0.0;
    double upper = 0.0;
};

/// Critical bounds keyed by (case, k), each with 10%, 5% and 1% rows.
/// File format: CSV with header case,k,level,lower,upper; level as "10%" or 0.10.
class BoundsTable {
public:
    /// Case I, k = 5 (the only combination shipped with the library).
    static BoundsTable embedded();
    static BoundsTable parse(std::string_view csv);
    static BoundsTable load(const std::filesystem::path& path);

    void add(BoundsCase c, std::size_t k, BoundsCritical row);
    /// Rows ordered 10%, 5%, 1%, or nullopt when any is missing.
    [[nodiscard]] std::optional<std::array<BoundsCritical, 3>> lookup(BoundsCase c, std::size_t k) const;

private:
    struct Entry {
        BoundsCase bounds_case;
        std::size_t k;
        BoundsCritical row;
    };
    std::vector<Entry> entries_;
};

struct BoundsLevel {
    BoundsCritical critical;
    BoundsOutcome outcome = BoundsOutcome::Inconclusive;
};

struct BoundsVerdict {
    double f_statistic = 0.0;
    std::size_t k = 0;
    BoundsCase bounds_case = BoundsCase::I;
    std::array<BoundsLevel, 3> levels;  ///< 10%, 5%, 1%
    std::optional<WaldResult> wald;

    /// Strongest level at which the outcome is Cointegrated, e.g. "cointegrated at 1%".
    [[nodiscard]] std::string summary() const;
};

/// Compares an F statistic with the bounds for (case, k): above the upper
/// bound is cointegration, below the lower bound is none, between is inconclusive.
/// A user table takes precedence over the embedded one.
BoundsVerdict bounds_verdict(double f, std::size_t k, BoundsCase bounds_case,
                             const BoundsTable* user_table = nullptr);

/// Wald F on the whole level block of an ARDL fit, using the fit's covariance
/// unless `force_classical` is set.
BoundsVerdict bounds_test(const ArdlFit& fit, const BoundsTable* user_table = nullptr,
                          bool force_classical = false);

struct LongRunMultiplier {
    std::string name;
    double multiplier = 0.0;
    double std_error = 0.0;
    double t_stat = 0.0;
    double p_value = 1.0;
};

/// −φ_i/φ_dep with first-order delta-method standard errors. `cov` (optional)
/// is the covariance of (φ_1..φ_m, φ_dep), dependent last; without it the
/// standard errors are NaN. Throws DegenerateDenominator when
/// |φ_dep| < 1e-12 · max|φ|.
std::vector<LongRunMultiplier> long_run_multipliers(std::span<const std::string> names,
                                                    std::span<const double> phi, double phi_dep,
                                                    const Matrix* cov = nullptr, double df = 0.0);

std::vector<LongRunMultiplier> long_run(const ArdlFit& fit);

struct EcmFit {
    OlsFit fit;
    std::size_t ect_index = 0;
    double lambda = 0.0;
    double lambda_se = 0.0;
    double lambda_t = 0.0;
    double lambda_p = 1.0;
    /// λ significant at 5% and strictly inside (−1, 0).
    bool valid = false;
    /// "corrects 20.18% of previous-period disequilibrium"
    std::string interpretation;
};

/// "corrects X% of previous-period disequilibrium" for an adjustment coefficient.
std::string adjustment_interpretation(double lambda);

/// Restricted error-correction model: the short-run terms of `spec` taken at
/// their max lags, Δf_t for fixed regressors, and ECT_{t−1} from the lagged
/// long-run residuals (aligned by period).
EcmFit ecm_fit(const ArdlSpec& spec, const Dataset& data, const TimeSeries& longrun_residuals);

/// Residuals of a levels regression as a period-indexed series named "ECT".
TimeSeries ect_from_levels(const OlsFit& levels_fit);

/// y_t on x_{j,t}, fixed f_t and an optional intercept: the long-run levels model.
RegressionSpec levels_regression(const ArdlSpec& spec, bool intercept = true);

}  // namespace tsecon
