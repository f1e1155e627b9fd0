#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tsecon/dataio.hpp"
#include "tsecon/regression.hpp"

namespace tsecon {

/// Σ(e_t − e_{t−1})² / Σe_t². Throws ZeroResiduals when Σe² = 0.
double durbin_watson(std::span<const double> residuals);

/// An n·R² auxiliary-regression test with its χ² reference.
struct LmTest {
    double statistic = 0.0;
    std::size_t df = 0;
    double p = 1.0;
};

/// Breusch–Godfrey serial correlation test. Presample lagged residuals are
/// set to zero so the auxiliary regression keeps all n observations.
LmTest breusch_godfrey(const Design& design, const OlsFit& fit, std::size_t lags);
LmTest breusch_godfrey(const OlsFit& fit, const RegressionSpec& spec, const Dataset& data,
                       std::size_t lags);

/// Breusch–Pagan–Godfrey: e² on a constant and the non-constant regressors.
LmTest breusch_pagan_godfrey(const Design& design, const OlsFit& fit);
LmTest breusch_pagan_godfrey(const OlsFit& fit, const RegressionSpec& spec, const Dataset& data);

/// White: e² on a constant, the regressors, their squares and cross products.
/// Constant columns and exact duplicates (e.g. the square of a 0/1 dummy) are dropped.
LmTest white_test(const Design& design, const OlsFit& fit);
LmTest white_test(const OlsFit& fit, const RegressionSpec& spec, const Dataset& data);

struct DiagnosticsReport {
    std::optional<double> durbin_watson;
    std::optional<LmTest> bg_lm;
    std::optional<LmTest> bpg;
    std::optional<LmTest> white;
};

struct DiagnosticsRequest {
    bool durbin_watson = true;
    std::size_t bg_lags = 2;  ///< 0 skips the test
    bool bpg = true;
    bool white = true;
};

DiagnosticsReport diagnose(const Design& design, const OlsFit& fit, const DiagnosticsRequest& request = {});

/// Brown–Durbin–Evans boundary constants.
enum class CusumLevel { Pct1, Pct5, Pct10 };
double cusum_constant(CusumLevel level) noexcept;

struct CusumResult {
    std::vector<Period> periods;              ///< observation r+1 .. n
    std::vector<double> recursive_residuals;  ///< w_t
    std::vector<double> path;                 ///< W_t = Σ w_j / σ̂
    std::vector<double> upper;
    std::vector<double> lower;
    double sigma = 0.0;
    double constant = 0.948;
    bool stable = true;
    std::optional<Period> first_crossing;
};

/// CUSUM of recursive residuals. The recursion adds one row at a time to a
/// Givens-updated QR factor, so each step costs O(k²). It starts after the
/// first r >= k rows whose regressors have full column rank (r = k unless a
/// column such as an event dummy is zero early in the sample).
CusumResult cusum(const Design& design, CusumLevel level = CusumLevel::Pct5);
CusumResult cusum(const RegressionSpec& spec, const Dataset& data, CusumLevel level = CusumLevel::Pct5);

}  // namespace tsecon
