#include <algorithm>
#include <cstdio>
#include <functional>

#include "json.hpp"
#include "text.hpp"
#include "tsecon/report.hpp"

namespace tsecon::report {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
    if (!obj.is_object()) throw UsageError(where + " must be a JSON object");
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw UsageError("unknown config key '" + where + (where.empty() ? "" : ".") + key + "'");
        }
    }
}

template <class T>
T get(const json& obj, const char* key, const std::string& where) {
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw UsageError("config key '" + where + (where.empty() ? "" : ".") + key + "' has the wrong type");
    }
}

template <class T>
void read(const json& obj, const char* key, const std::string& where, T& out) {
    if (obj.contains(key)) out = get<T>(obj, key, where);
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    const std::filesystem::path path(p);
    return path.is_relative() && !base.empty() ? base / path : path;
}

CusumLevel parse_cusum_level(double level) {
    if (std::abs(level - 0.01) < 1e-12) return CusumLevel::Pct1;
    if (std::abs(level - 0.05) < 1e-12) return CusumLevel::Pct5;
    if (std::abs(level - 0.10) < 1e-12) return CusumLevel::Pct10;
    throw UsageError("cusum level must be 0.01, 0.05 or 0.10");
}

double cusum_level_value(CusumLevel l) {
    switch (l) {
        case CusumLevel::Pct1: return 0.01;
        case CusumLevel::Pct5: return 0.05;
        case CusumLevel::Pct10: return 0.10;
    }
    return 0.05;
}

std::string hex64(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

bool daily_stage(std::string_view s) { return s == "varselect" || s == "granger"; }
bool monthly_stage(std::string_view s) {
    return s == "ols" || s == "ardl" || s == "bounds" || s == "longrun" || s == "ecm" || s == "diagnostics" ||
           s == "cusum";
}

}  // namespace

PipelineConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    reject_unknown(j,
                   {"data", "frequency", "dependent", "regressors", "fixed", "events", "dummy", "stages", "adf", "var",
                    "ols", "ardl", "ecm", "diagnostics", "cusum"},
                   "");
    PipelineConfig c;
    if (!j.contains("data")) throw UsageError("config needs a 'data' path");
    c.data = resolve(base_dir, get<std::string>(j, "data", ""));
    if (j.contains("frequency")) c.frequency = parse_frequency(get<std::string>(j, "frequency", ""));
    read(j, "dependent", "", c.dependent);
    read(j, "regressors", "", c.regressors);
    read(j, "fixed", "", c.fixed);
    if (j.contains("events") && !j["events"].is_null()) c.events = resolve(base_dir, get<std::string>(j, "events", ""));
    read(j, "dummy", "", c.dummy_name);
    read(j, "stages", "", c.stages);
    for (const auto& s : c.stages) {
        if (std::find(kAllStages.begin(), kAllStages.end(), s) == kAllStages.end()) {
            throw UsageError("unknown stage '" + s + "'");
        }
    }

    if (j.contains("adf")) {
        const auto& a = j["adf"];
        reject_unknown(a, {"level", "difference", "max_lag", "criterion"}, "adf");
        if (a.contains("level")) c.adf_level = parse_deterministic(get<std::string>(a, "level", "adf"));
        if (a.contains("difference")) c.adf_difference = parse_deterministic(get<std::string>(a, "difference", "adf"));
        read(a, "max_lag", "adf", c.adf_max_lag);
        if (a.contains("criterion")) c.adf_criterion = parse_criterion(get<std::string>(a, "criterion", "adf"));
    }
    if (j.contains("var")) {
        const auto& v = j["var"];
        reject_unknown(v, {"series", "difference", "max_lag", "granger_lags"}, "var");
        read(v, "series", "var", c.var_series);
        read(v, "difference", "var", c.var_difference);
        read(v, "max_lag", "var", c.var_max_lag);
        read(v, "granger_lags", "var", c.granger_lags);
        for (std::size_t p : c.granger_lags)
            if (p == 0) throw UsageError("granger lags must be at least 1");
    }
    if (j.contains("ols")) {
        const auto& o = j["ols"];
        reject_unknown(o, {"covariance", "intercept"}, "ols");
        if (o.contains("covariance")) c.ols_covariance = parse_covariance(get<std::string>(o, "covariance", "ols"));
        read(o, "intercept", "ols", c.ols_intercept);
    }
    if (j.contains("ardl")) {
        const auto& a = j["ardl"];
        reject_unknown(a,
                       {"dependent_max_lag", "max_lag", "max_lags", "case", "criterion", "covariance", "bounds_table",
                        "classical_bounds"},
                       "ardl");
        read(a, "dependent_max_lag", "ardl", c.ardl_dependent_max_lag);
        read(a, "max_lag", "ardl", c.ardl_max_lag);
        if (a.contains("max_lags")) c.ardl_max_lags = get<std::map<std::string, std::size_t>>(a, "max_lags", "ardl");
        if (a.contains("case")) c.bounds_case = parse_bounds_case(get<std::string>(a, "case", "ardl"));
        if (a.contains("criterion")) c.ardl_criterion = parse_criterion(get<std::string>(a, "criterion", "ardl"));
        if (a.contains("covariance")) c.ardl_covariance = parse_covariance(get<std::string>(a, "covariance", "ardl"));
        if (a.contains("bounds_table") && !a["bounds_table"].is_null()) c.bounds_table = resolve(base_dir, get<std::string>(a, "bounds_table", "ardl"));
        read(a, "classical_bounds", "ardl", c.classical_bounds);
        if (c.ardl_dependent_max_lag == 0) throw EmptyGrid("ardl.dependent_max_lag must be at least 1");
    }
    if (j.contains("ecm")) {
        const auto& e = j["ecm"];
        reject_unknown(e, {"levels_intercept"}, "ecm");
        read(e, "levels_intercept", "ecm", c.levels_intercept);
    }
    if (j.contains("diagnostics")) {
        const auto& d = j["diagnostics"];
        reject_unknown(d, {"bg_lags"}, "diagnostics");
        read(d, "bg_lags", "diagnostics", c.bg_lags);
    }
    if (j.contains("cusum")) {
        const auto& cu = j["cusum"];
        reject_unknown(cu, {"level"}, "cusum");
        if (cu.contains("level")) c.cusum_level = parse_cusum_level(get<double>(cu, "level", "cusum"));
    }
    return c;
}

PipelineConfig load_config(const std::filesystem::path& path) {
    return parse_config(detail::read_file(path), path.parent_path());
}

std::string config_json(const PipelineConfig& c) {
    json j;
    j["data"] = c.data.generic_string();
    j["frequency"] = std::string(to_string(c.frequency));
    j["dependent"] = c.dependent;
    j["regressors"] = c.regressors;
    j["fixed"] = c.fixed;
    j["events"] = c.events ? json(c.events->generic_string()) : json(nullptr);
    j["dummy"] = c.dummy_name;
    j["stages"] = c.stages;
    j["adf"] = {{"level", std::string(to_string(c.adf_level))},
                {"difference", std::string(to_string(c.adf_difference))},
                {"max_lag", c.adf_max_lag},
                {"criterion", std::string(to_string(c.adf_criterion))}};
    j["var"] = {{"series", c.var_series},
                {"difference", c.var_difference},
                {"max_lag", c.var_max_lag},
                {"granger_lags", c.granger_lags}};
    j["ols"] = {{"covariance", to_string(c.ols_covariance)}, {"intercept", c.ols_intercept}};
    json lags = json::object();
    for (const auto& [k, v] : c.ardl_max_lags) lags[k] = v;
    j["ardl"] = {{"dependent_max_lag", c.ardl_dependent_max_lag},
                 {"max_lag", c.ardl_max_lag},
                 {"max_lags", lags},
                 {"case", std::string(to_string(c.bounds_case))},
                 {"criterion", std::string(to_string(c.ardl_criterion))},
                 {"covariance", to_string(c.ardl_covariance)},
                 {"bounds_table", c.bounds_table ? json(c.bounds_table->generic_string()) : json(nullptr)},
                 {"classical_bounds", c.classical_bounds}};
    j["ecm"] = {{"levels_intercept", c.levels_intercept}};
    j["diagnostics"] = {{"bg_lags", c.bg_lags}};
    j["cusum"] = {{"level", cusum_level_value(c.cusum_level)}};
    return j.dump();
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const StageReport* RunReport::stage(std::string_view name) const {
    for (const auto& s : stages)
        if (s.name == name) return &s;
    return nullptr;
}

int exit_code_for(ErrorCategory c) noexcept {
    switch (c) {
        case ErrorCategory::Usage: return 1;
        case ErrorCategory::Data: return 2;
        case ErrorCategory::Io: return 2;
        case ErrorCategory::Numerical: return 3;
    }
    return 3;
}

int RunReport::exit_code() const {
    for (const auto& s : stages)
        if (s.status == StageStatus::Failed) return s.error ? exit_code_for(*s.error) : 3;
    return 0;
}

RunReport full_report(const PipelineConfig& config) {
    const std::string bytes = detail::read_file(config.data);
    const Dataset data = parse_csv(bytes, config.frequency);
    return full_report(config, data, bytes);
}

RunReport full_report(const PipelineConfig& config, const Dataset& input, std::string_view data_bytes) {
    RunReport report;
    Dataset data = input;

    std::uint64_t digest = fnv1a(data_bytes);
    PipelineConfig cfg = config;
    if (cfg.events) {
        const std::string ev = detail::read_file(*cfg.events);
        digest = fnv1a(ev, digest);
        const auto dummy = dummy_from_events(parse_events(ev, data.frequency()), data.index(), data.frequency(),
                                             cfg.dummy_name);
        if (!data.find(cfg.dummy_name)) data.add(dummy.series);
        if (std::find(cfg.fixed.begin(), cfg.fixed.end(), cfg.dummy_name) == cfg.fixed.end())
            cfg.fixed.push_back(cfg.dummy_name);
    }
    std::optional<BoundsTable> user_table;
    if (cfg.bounds_table) {
        const std::string tb = detail::read_file(*cfg.bounds_table);
        digest = fnv1a(tb, digest);
        user_table = BoundsTable::parse(tb);
    }
    report.provenance = {"fnv1a64:" + hex64(digest), std::string(kVersion), config_json(config)};

    // referenced columns must exist before any stage runs
    for (const auto& name : cfg.regressors) (void)data.at(name);
    for (const auto& name : cfg.fixed) (void)data.at(name);
    for (const auto& name : cfg.var_series) (void)data.at(name);
    if (!cfg.dependent.empty()) (void)data.at(cfg.dependent);

    std::vector<std::string> wanted = cfg.stages;
    if (wanted.empty()) {
        for (const auto& s : kAllStages) {
            if (daily_stage(s) && data.frequency() != Frequency::Daily) continue;
            if (monthly_stage(s) && data.frequency() != Frequency::Monthly) continue;
            wanted.push_back(s);
        }
    }
    auto enabled = [&](std::string_view s) { return std::find(wanted.begin(), wanted.end(), s) != wanted.end(); };
    const bool needs_model = std::any_of(wanted.begin(), wanted.end(), [](const auto& s) {
        return s != "describe" && s != "corr" && s != "adf";
    });
    if (needs_model && cfg.dependent.empty()) throw UsageError("config needs a 'dependent' series for model stages");

    // Stage outcomes for prerequisite tracking, including stages computed
    // only because a later one needs them.
    std::map<std::string, std::string> failed;
    auto run = [&](const std::string& name, const std::vector<std::string>& prereqs,
                   const std::function<StageReport()>& body, bool report_it) -> bool {
        for (const auto& p : prereqs) {
            if (failed.count(p)) {
                failed[name] = "prerequisite '" + p + "' did not complete";
                if (report_it) {
                    StageReport s = make_stage(name, StageStatus::Skipped, failed[name]);
                    s.text = "[" + name + "] skipped: " + s.reason + "\n";
                    report.stages.push_back(std::move(s));
                }
                return false;
            }
        }
        try {
            StageReport s = body();
            if (report_it) report.stages.push_back(std::move(s));
            return true;
        } catch (const Error& e) {
            failed[name] = e.what();
            if (report_it) {
                StageReport s = make_stage(name, StageStatus::Failed, e.what(), e.category());
                s.text = "[" + name + "] failed: " + s.reason + "\n";
                report.stages.push_back(std::move(s));
            }
            return false;
        }
    };

    if (enabled("describe")) {
        run("describe", {}, [&] {
            std::vector<DescriptiveSummary> rows;
            for (const auto& s : data.series()) rows.push_back(describe(s));
            return describe_stage(rows);
        }, true);
    }
    if (enabled("corr")) run("corr", {}, [&] { return correlation_stage(correlation_matrix(data)); }, true);
    if (enabled("adf")) {
        run("adf", {}, [&] {
            std::vector<AdfRow> rows;
            for (const auto& s : data.series()) {
                AdfRow r{s.name(), adf_test(s, {cfg.adf_level, cfg.adf_max_lag, cfg.adf_criterion}), std::nullopt};
                r.difference = adf_test(diff(s), {cfg.adf_difference, cfg.adf_max_lag, cfg.adf_criterion});
                rows.push_back(std::move(r));
            }
            return adf_stage(rows);
        }, true);
    }

    // daily path
    std::vector<std::string> var_names = cfg.var_series;
    if (var_names.empty()) {
        var_names.push_back(cfg.dependent);
        var_names.insert(var_names.end(), cfg.regressors.begin(), cfg.regressors.end());
    }
    std::optional<Dataset> var_data;
    std::size_t var_lag = 1;
    if (enabled("varselect") || enabled("granger")) {
        run("varselect", {}, [&] {
            Dataset sel = data.select(var_names);
            var_data = cfg.var_difference ? diff(sel) : sel;
            const auto table = lag_selection(*var_data, cfg.var_max_lag);
            var_lag = std::max<std::size_t>(table.star_sc, 1);
            return lag_selection_stage(table, var_names);
        }, enabled("varselect"));
    }
    if (enabled("granger")) {
        run("granger", {"varselect"}, [&] {
            std::vector<std::size_t> lags = cfg.granger_lags;
            if (lags.empty()) lags.push_back(var_lag);
            std::vector<GrangerResult> rows;
            for (std::size_t p : lags)
                for (const auto& effect : var_names)
                    for (const auto& cause : var_names)
                        if (cause != effect) rows.push_back(granger_test(*var_data, cause, effect, p));
            return granger_stage(rows);
        }, true);
    }

    // monthly path
    ArdlSpec spec;
    spec.dependent = cfg.dependent;
    spec.dependent_max_lag = cfg.ardl_dependent_max_lag;
    for (const auto& r : cfg.regressors) {
        const auto it = cfg.ardl_max_lags.find(r);
        spec.regressors.push_back({r, it == cfg.ardl_max_lags.end() ? cfg.ardl_max_lag : it->second});
    }
    spec.fixed = cfg.fixed;
    spec.deterministic = cfg.bounds_case;
    spec.criterion = cfg.ardl_criterion;
    spec.covariance = cfg.ardl_covariance;

    std::optional<OlsFit> levels_fit;
    std::optional<ArdlFit> ardl;
    const bool want_ols = enabled("ols"), want_ecm = enabled("ecm");
    if (want_ols || want_ecm) {
        run("ols", {}, [&] {
            RegressionSpec lv = levels_regression(spec, cfg.levels_intercept);
            lv.covariance = cfg.ols_covariance;
            levels_fit = ols_fit(lv, data);
            StageReport s = make_stage("ols");
            s.text = coefficient_table(*levels_fit, "Least squares in levels: " + cfg.dependent);
            s.records = coefficient_records(*levels_fit, "ols", "levels.");

            RegressionSpec df;
            df.dependent = Term{cfg.dependent, 0, true};
            for (const auto& r : cfg.regressors) df.terms.push_back(Term{r, 0, true});
            for (const auto& f : cfg.fixed) df.terms.push_back(Term{f, 0, false});
            df.intercept = cfg.ols_intercept;
            df.covariance = cfg.ols_covariance;
            const OlsFit dfit = ols_fit(df, data);
            s.text += "\n" + coefficient_table(dfit, "Least squares in first differences: D(" + cfg.dependent + ")");
            const auto more = coefficient_records(dfit, "ols", "diff.");
            s.records.insert(s.records.end(), more.begin(), more.end());
            return s;
        }, want_ols);
    }
    const bool want_ardl = std::any_of(wanted.begin(), wanted.end(), [](const auto& s) {
        return s == "ardl" || s == "bounds" || s == "longrun" || s == "ecm" || s == "diagnostics" || s == "cusum";
    });
    if (want_ardl) {
        run("ardl", {}, [&] {
            ardl = ardl_search(spec, data);
            return ardl_stage(*ardl);
        }, enabled("ardl"));
    }
    if (enabled("bounds")) {
        run("bounds", {"ardl"}, [&] {
            return bounds_stage(bounds_test(*ardl, user_table ? &*user_table : nullptr, cfg.classical_bounds));
        }, true);
    }
    if (enabled("longrun")) run("longrun", {"ardl"}, [&] { return long_run_stage(long_run(*ardl), cfg.dependent); }, true);
    if (want_ecm) {
        run("ecm", {"ols", "ardl"}, [&] {
            return ecm_stage(ecm_fit(ardl->chosen_spec(), data, ect_from_levels(*levels_fit)));
        }, true);
    }
    if (enabled("diagnostics")) {
        run("diagnostics", {"ardl"}, [&] {
            DiagnosticsRequest req;
            req.bg_lags = cfg.bg_lags;
            return diagnostics_stage(diagnose(ardl->design, ardl->fit, req));
        }, true);
    }
    if (enabled("cusum")) {
        run("cusum", {"ardl"}, [&] {
            report.cusum = cusum(ardl->design, cfg.cusum_level);
            return cusum_stage(*report.cusum);
        }, true);
    }
    return report;
}

std::string render_text(const RunReport& r) {
    std::string out = "tsecon " + r.provenance.version + "  input " + r.provenance.input_digest + "\n";
    for (const auto& s : r.stages) out += "\n" + s.text;
    return out;
}

std::string render_jsonl(const RunReport& r) {
    std::vector<Record> recs;
    recs.push_back({"provenance", "input_digest", r.provenance.input_digest, std::nullopt, std::nullopt});
    recs.push_back({"provenance", "version", r.provenance.version, std::nullopt, std::nullopt});
    recs.push_back({"provenance", "config", r.provenance.config, std::nullopt, std::nullopt});
    for (const auto& s : r.stages) {
        std::string status(to_string(s.status));
        if (s.status != StageStatus::Ok) status += ": " + s.reason;
        recs.push_back({s.name, "status", status, std::nullopt, std::nullopt});
        recs.insert(recs.end(), s.records.begin(), s.records.end());
    }
    return jsonl(recs);
}

}  // namespace tsecon::report
