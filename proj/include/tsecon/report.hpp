#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tsecon/ardl_ecm.hpp"
#include "tsecon/core_stats.hpp"
#include "tsecon/dataio.hpp"
#include "tsecon/diagnostics.hpp"
#include "tsecon/error.hpp"
#include "tsecon/regression.hpp"
#include "tsecon/unit_root.hpp"
#include "tsecon/var_granger.hpp"

namespace tsecon::report {

inline constexpr std::string_view kVersion = "0.1.0";

/// One machine-readable statistic. Serialised as a JSON line
/// {"stage","name","value","se","p"}; absent or non-finite numbers become null.
struct Record {
    std::string stage;
    std::string name;
    std::variant<double, std::string> value;
    std::optional<double> se;
    std::optional<double> p;
};

enum class StageStatus { Ok, Failed, Skipped };
std::string_view to_string(StageStatus s) noexcept;

struct StageReport {
    std::string name;
    StageStatus status = StageStatus::Ok;
    std::string reason;  ///< failure message or skip reason
    std::optional<ErrorCategory> error;
    std::string text;
    std::vector<Record> records;
};

inline StageReport make_stage(std::string name, StageStatus status = StageStatus::Ok, std::string reason = {},
                              std::optional<ErrorCategory> error = std::nullopt) {
    StageReport s;
    s.name = std::move(name);
    s.status = status;
    s.reason = std::move(reason);
    s.error = error;
    return s;
}

// ---- formatting -------------------------------------------------------------

/// Fixed-point with `decimals` places; "NA" for NaN. Locale independent.
std::string fixed(double v, int decimals = 4);
/// Shortest string that parses back to exactly `v`.
std::string round_trip(double v);
/// Coefficient with its significance stars, e.g. "-0.2018***".
std::string starred(double coef, double p);

StageReport describe_stage(std::span<const DescriptiveSummary> rows);
StageReport correlation_stage(const CorrelationMatrix& m);

struct AdfRow {
    std::string series;
    AdfResult level;
    std::optional<AdfResult> difference;
};
StageReport adf_stage(std::span<const AdfRow> rows);

StageReport lag_selection_stage(const LagSelectionTable& t, std::span<const std::string> names);
StageReport granger_stage(std::span<const GrangerResult> rows);

/// Coefficient atop its parenthesised standard error, then fit statistics.
std::string coefficient_table(const OlsFit& fit, std::string_view title);
std::vector<Record> coefficient_records(const OlsFit& fit, std::string_view stage, std::string_view prefix = {});
StageReport ols_stage(const OlsFit& fit, std::string_view stage, std::string_view title);

StageReport ardl_stage(const ArdlFit& fit);
StageReport bounds_stage(const BoundsVerdict& v);
StageReport long_run_stage(std::span<const LongRunMultiplier> rows, std::string_view dependent);
StageReport ecm_stage(const EcmFit& e);
StageReport diagnostics_stage(const DiagnosticsReport& d);
StageReport cusum_stage(const CusumResult& c);

/// "period,W,lower,upper" rows, one per recursive residual.
std::string cusum_csv(const CusumResult& c);
/// Self-contained SVG with the CUSUM path and both boundaries.
std::string cusum_svg(const CusumResult& c);
/// Writes CSV, or SVG when the path ends in ".svg". Throws IoError.
void emit_cusum_plot(const CusumResult& c, const std::filesystem::path& path);

std::string jsonl(std::span<const Record> records);
void write_text_file(const std::filesystem::path& path, std::string_view content);

// ---- pipeline ---------------------------------------------------------------

struct PipelineConfig {
    std::filesystem::path data;
    Frequency frequency = Frequency::Monthly;
    std::string dependent;
    std::vector<std::string> regressors;
    std::vector<std::string> fixed;
    std::optional<std::filesystem::path> events;
    std::string dummy_name = "DPOL";
    /// Empty runs every stage of the frequency's path.
    std::vector<std::string> stages;

    Deterministic adf_level = Deterministic::Constant;
    Deterministic adf_difference = Deterministic::None;
    std::size_t adf_max_lag = 8;
    InfoCriterion adf_criterion = InfoCriterion::Sic;

    std::vector<std::string> var_series;  ///< empty: dependent + regressors
    bool var_difference = true;
    std::size_t var_max_lag = 8;
    std::vector<std::size_t> granger_lags;  ///< empty: the SC-selected lag (at least 1)

    CovarianceSpec ols_covariance = CovarianceSpec::hac();
    bool ols_intercept = true;

    std::size_t ardl_dependent_max_lag = 8;
    std::size_t ardl_max_lag = 8;
    std::map<std::string, std::size_t> ardl_max_lags;  ///< per-regressor overrides
    BoundsCase bounds_case = BoundsCase::I;
    InfoCriterion ardl_criterion = InfoCriterion::Sic;
    CovarianceSpec ardl_covariance = CovarianceSpec::hac();
    std::optional<std::filesystem::path> bounds_table;
    bool classical_bounds = false;

    bool levels_intercept = true;
    std::size_t bg_lags = 2;
    CusumLevel cusum_level = CusumLevel::Pct5;
};

inline const std::vector<std::string> kAllStages{"describe", "corr",  "adf",      "varselect",   "granger",
                                                 "ols",      "ardl",  "bounds",   "longrun",     "ecm",
                                                 "diagnostics", "cusum"};

/// Parses the JSON config; relative paths resolve against `base_dir`.
/// Unknown keys and out-of-range options throw UsageError.
PipelineConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
PipelineConfig load_config(const std::filesystem::path& path);
/// Canonical compact JSON echo of a config.
std::string config_json(const PipelineConfig& c);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

struct Provenance {
    std::string input_digest;
    std::string version;
    std::string config;
};

struct RunReport {
    Provenance provenance;
    std::vector<StageReport> stages;
    std::optional<CusumResult> cusum;

    [[nodiscard]] const StageReport* stage(std::string_view name) const;
    /// 0 when no stage failed; otherwise the exit code of the first failure.
    [[nodiscard]] int exit_code() const;
};

/// Runs the configured stages in pipeline order. Stages whose prerequisite
/// failed are reported as skipped with the reason.
RunReport full_report(const PipelineConfig& config);
/// Same with the data already loaded; the digest covers `data_bytes`.
RunReport full_report(const PipelineConfig& config, const Dataset& data, std::string_view data_bytes);

std::string render_text(const RunReport& r);
std::string render_jsonl(const RunReport& r);

/// Exit code for an error category: usage 1, data and I/O 2, numerical 3.
int exit_code_for(ErrorCategory c) noexcept;

}  // namespace tsecon::report
