#include "tsecon/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tsecon/report.hpp"

namespace tsecon {

namespace {

using namespace report;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::size_t parse_count(const std::string& s, const std::string& what) {
    if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw UsageError("bad " + what + " '" + s + "'");
    }
    return std::stoul(s);
}

struct Common {
    std::string data;
    std::string freq = "monthly";
    std::string out;
};

struct ModelArgs {
    std::string dep;
    std::string reg;
    std::string fixed;
    std::string events;
    std::string dummy = "DPOL";
    std::size_t max_lag = 8;
    std::size_t dep_max_lag = 8;
    std::string orders;
    std::string bounds_case = "I";
    std::string ic = "sic";
    std::string cov = "hac";
    std::string bounds_table;
    bool classical = false;
    bool levels_intercept = true;
    std::string plot_cusum;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("data", c.data, "CSV file (first column is the period)")->required();
    app->add_option("--freq", c.freq, "monthly | daily")->capture_default_str();
    app->add_option("--out", c.out, "machine-readable output (JSON lines)");
}

void add_model(CLI::App* app, ModelArgs& m) {
    app->add_option("--dep", m.dep, "dependent series")->required();
    app->add_option("--reg", m.reg, "dynamic regressors, comma separated; NAME:q sets a per-series max lag")
        ->required();
    app->add_option("--fixed", m.fixed, "fixed regressors (level block only), comma separated");
    app->add_option("--events", m.events, "event calendar CSV; adds a 0/1 dummy as a fixed regressor");
    app->add_option("--dummy", m.dummy, "name of the event dummy")->capture_default_str();
    app->add_option("--max-lag", m.max_lag, "default max lag for regressors")->capture_default_str();
    app->add_option("--dep-max-lag", m.dep_max_lag, "max lag order p of the dependent")->capture_default_str();
    app->add_option("--orders", m.orders, "fixed orders p,q1,q2,... instead of a search");
    app->add_option("--case", m.bounds_case, "bounds case (I or III)")->capture_default_str();
    app->add_option("--ic", m.ic, "aic | sic")->capture_default_str();
    app->add_option("--cov", m.cov, "classical | white | hac | hac:<L>")->capture_default_str();
    app->add_option("--bounds-table", m.bounds_table, "CSV of critical bounds: case,k,level,lower,upper");
    app->add_flag("--classical-bounds", m.classical, "Wald F with classical covariance");
    app->add_flag("!--no-levels-intercept", m.levels_intercept, "levels regression for the ECT without intercept");
    app->add_option("--plot-cusum", m.plot_cusum, "write CUSUM plot data (CSV, or SVG for *.svg)");
}

Dataset load(const Common& c) { return load_csv(c.data, parse_frequency(c.freq)); }

// Adds the event dummy (if requested) and returns the ARDL spec.
ArdlSpec model_spec(const ModelArgs& m, Dataset& data) {
    ArdlSpec spec;
    spec.dependent = m.dep;
    spec.dependent_max_lag = m.dep_max_lag;
    for (const auto& item : split_list(m.reg)) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            spec.regressors.push_back({item, m.max_lag});
        } else {
            spec.regressors.push_back({item.substr(0, colon), parse_count(item.substr(colon + 1), "max lag")});
        }
    }
    spec.fixed = split_list(m.fixed);
    if (!m.events.empty()) {
        const auto dummy = dummy_from_events(load_events(m.events, data.frequency()), data.index(), data.frequency(),
                                             m.dummy);
        if (!data.find(m.dummy)) data.add(dummy.series);
        if (std::find(spec.fixed.begin(), spec.fixed.end(), m.dummy) == spec.fixed.end()) spec.fixed.push_back(m.dummy);
    }
    spec.deterministic = parse_bounds_case(m.bounds_case);
    spec.criterion = parse_criterion(m.ic);
    spec.covariance = parse_covariance(m.cov);
    (void)data.at(spec.dependent);
    for (const auto& r : spec.regressors) (void)data.at(r.name);
    for (const auto& f : spec.fixed) (void)data.at(f);
    return spec;
}

ArdlFit estimate(const ModelArgs& m, const ArdlSpec& spec, const Dataset& data) {
    if (m.orders.empty()) return ardl_search(spec, data);
    const auto parts = split_list(m.orders);
    if (parts.size() != spec.regressors.size() + 1) {
        throw UsageError("--orders needs p followed by one q per regressor");
    }
    ArdlOrders o{parse_count(parts[0], "order"), {}};
    for (std::size_t i = 1; i < parts.size(); ++i) o.q.push_back(parse_count(parts[i], "order"));
    return ardl_fit(spec, o, data);
}

class Output {
public:
    Output(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}

    void add(const StageReport& s) {
        out_ << s.text;
        records_.insert(records_.end(), s.records.begin(), s.records.end());
    }
    void separator() { out_ << '\n'; }
    void finish() const {
        if (!path_.empty()) write_text_file(path_, jsonl(records_));
    }

private:
    std::ostream& out_;
    std::string path_;
    std::vector<Record> records_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Time-series econometrics toolkit: unit roots, VAR/Granger, ARDL bounds testing and ECM",
                 "tsecon"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Common common;
    std::function<void()> action;

    // describe / corr
    std::string cols;
    auto* describe_cmd = app.add_subcommand("describe", "descriptive statistics with Jarque-Bera");
    add_common(describe_cmd, common);
    describe_cmd->add_option("--cols", cols, "series to include, comma separated (default all)");
    describe_cmd->callback([&] {
        action = [&] {
            Dataset d = load(common);
            if (!cols.empty()) d = d.select(split_list(cols));
            std::vector<DescriptiveSummary> rows;
            for (const auto& s : d.series()) rows.push_back(describe(s));
            Output o(out, common.out);
            o.add(describe_stage(rows));
            o.finish();
        };
    });

    auto* corr_cmd = app.add_subcommand("corr", "Pearson correlation matrix");
    add_common(corr_cmd, common);
    corr_cmd->add_option("--cols", cols, "series to include, comma separated (default all)");
    corr_cmd->callback([&] {
        action = [&] {
            Dataset d = load(common);
            if (!cols.empty()) d = d.select(split_list(cols));
            Output o(out, common.out);
            o.add(correlation_stage(correlation_matrix(d)));
            o.finish();
        };
    });

    // adf
    std::string det, diff_det, ic = "sic";
    std::size_t max_lag = 8;
    auto* adf_cmd = app.add_subcommand("adf", "augmented Dickey-Fuller unit root test");
    add_common(adf_cmd, common);
    adf_cmd->add_option("--col", cols, "series, comma separated (default all)");
    adf_cmd->add_option("--det", det, "deterministic terms: none | const | trend")->required();
    adf_cmd->add_option("--diff-det", diff_det, "also test the first difference with these terms");
    adf_cmd->add_option("--max-lag", max_lag, "largest augmentation lag")->capture_default_str();
    adf_cmd->add_option("--ic", ic, "aic | sic")->capture_default_str();
    adf_cmd->callback([&] {
        action = [&] {
            Dataset d = load(common);
            if (!cols.empty()) d = d.select(split_list(cols));
            const AdfSpec level{parse_deterministic(det), max_lag, parse_criterion(ic)};
            std::vector<AdfRow> rows;
            for (const auto& s : d.series()) {
                AdfRow r{s.name(), adf_test(s, level), std::nullopt};
                if (!diff_det.empty())
                    r.difference = adf_test(diff(s), {parse_deterministic(diff_det), max_lag, level.criterion});
                rows.push_back(std::move(r));
            }
            Output o(out, common.out);
            o.add(adf_stage(rows));
            o.finish();
        };
    });

    // varselect / granger
    bool difference = false;
    auto* var_cmd = app.add_subcommand("varselect", "VAR lag order selection (LR, FPE, AIC, SC, HQ)");
    add_common(var_cmd, common);
    var_cmd->add_option("--cols", cols, "series in the VAR (default all)");
    var_cmd->add_option("--max-lag", max_lag, "largest lag considered")->capture_default_str();
    var_cmd->add_flag("--diff", difference, "first-difference the series");
    var_cmd->callback([&] {
        action = [&] {
            Dataset d = load(common);
            if (!cols.empty()) d = d.select(split_list(cols));
            if (difference) d = diff(d);
            Output o(out, common.out);
            o.add(lag_selection_stage(lag_selection(d, max_lag), d.names()));
            o.finish();
        };
    });

    std::string cause, effect, lags;
    auto* granger_cmd = app.add_subcommand("granger", "pairwise Granger causality F tests within a VAR");
    add_common(granger_cmd, common);
    granger_cmd->add_option("--cols", cols, "series in the VAR (default all)");
    granger_cmd->add_option("--cause", cause, "causing series (default every pair)");
    granger_cmd->add_option("--effect", effect, "affected series (default every pair)");
    granger_cmd->add_option("--lags", lags, "VAR lag order(s), comma separated")->required();
    granger_cmd->add_flag("--diff", difference, "first-difference the series");
    granger_cmd->callback([&] {
        action = [&] {
            Dataset d = load(common);
            if (!cols.empty()) d = d.select(split_list(cols));
            if (difference) d = diff(d);
            std::vector<GrangerResult> rows;
            for (const auto& l : split_list(lags)) {
                const std::size_t p = parse_count(l, "lag");
                for (const auto& e : d.names())
                    for (const auto& c : d.names()) {
                        if (c == e || (!cause.empty() && c != cause) || (!effect.empty() && e != effect)) continue;
                        rows.push_back(granger_test(d, c, e, p));
                    }
            }
            if (rows.empty()) throw UsageError("no cause/effect pair matches the selected series");
            Output o(out, common.out);
            o.add(granger_stage(rows));
            o.finish();
        };
    });

    // ols
    std::string dep_term, reg_terms, cov = "classical", plot;
    bool no_intercept = false, trend = false, diagnostics = false;
    std::size_t bg_lags = 2;
    auto* ols_cmd = app.add_subcommand("ols", "least squares with classical, White or HAC covariance");
    add_common(ols_cmd, common);
    ols_cmd->add_option("--dep", dep_term, "dependent term, e.g. BIST or D(BIST)")->required();
    ols_cmd->add_option("--reg", reg_terms, "regressor terms, e.g. CDS,D(EX),BIST(-1)");
    ols_cmd->add_flag("--no-intercept", no_intercept, "omit the constant");
    ols_cmd->add_flag("--trend", trend, "add a linear trend");
    ols_cmd->add_option("--cov", cov, "classical | white | hac | hac:<L>")->capture_default_str();
    ols_cmd->add_flag("--diagnostics", diagnostics, "append residual diagnostics");
    ols_cmd->add_option("--bg-lags", bg_lags, "Breusch-Godfrey lags")->capture_default_str();
    ols_cmd->add_option("--plot-cusum", plot, "write CUSUM plot data (CSV, or SVG for *.svg)");
    ols_cmd->callback([&] {
        action = [&] {
            const Dataset d = load(common);
            RegressionSpec spec;
            spec.dependent = parse_term(dep_term);
            for (const auto& t : split_list(reg_terms)) spec.terms.push_back(parse_term(t));
            spec.intercept = !no_intercept;
            spec.trend = trend;
            spec.covariance = parse_covariance(cov);
            const Design design = build_design(spec, d);
            const OlsFit fit = fit_design(design, spec.covariance);
            Output o(out, common.out);
            o.add(ols_stage(fit, "ols", "Dependent variable: " + spec.dependent.label()));
            if (diagnostics) {
                DiagnosticsRequest req;
                req.bg_lags = bg_lags;
                o.separator();
                o.add(diagnostics_stage(diagnose(design, fit, req)));
            }
            if (!plot.empty()) {
                const auto c = cusum(design);
                o.separator();
                o.add(cusum_stage(c));
                emit_cusum_plot(c, plot);
            }
            o.finish();
        };
    });

    // ardl / bounds / ecm
    ModelArgs model;
    auto* ardl_cmd = app.add_subcommand("ardl", "ARDL lag search with long-run multipliers and diagnostics");
    add_common(ardl_cmd, common);
    add_model(ardl_cmd, model);
    ardl_cmd->callback([&] {
        action = [&] {
            Dataset d = load(common);
            const ArdlSpec spec = model_spec(model, d);
            const ArdlFit fit = estimate(model, spec, d);
            Output o(out, common.out);
            o.add(ardl_stage(fit));
            o.separator();
            o.add(long_run_stage(long_run(fit), spec.dependent));
            o.separator();
            o.add(diagnostics_stage(diagnose(fit.design, fit.fit)));
            if (!model.plot_cusum.empty()) {
                const auto c = cusum(fit.design);
                o.separator();
                o.add(cusum_stage(c));
                emit_cusum_plot(c, model.plot_cusum);
            }
            o.finish();
        };
    });

    std::optional<double> f_stat;
    std::optional<std::size_t> k_count;
    std::string bounds_case = "I", bounds_table, bounds_data;
    std::string bounds_freq = "monthly", bounds_out;
    ModelArgs bmodel;
    auto* bounds_cmd = app.add_subcommand("bounds", "bounds cointegration test from an F statistic or an ARDL fit");
    bounds_cmd->add_option("data", bounds_data, "CSV file; omit with --f and --k");
    bounds_cmd->add_option("--freq", bounds_freq, "monthly | daily")->capture_default_str();
    bounds_cmd->add_option("--out", bounds_out, "machine-readable output (JSON lines)");
    bounds_cmd->add_option("--f", f_stat, "Wald F statistic");
    bounds_cmd->add_option("--k", k_count, "number of level regressors excluding the dependent");
    bounds_cmd->add_option("--dep", bmodel.dep, "dependent series");
    bounds_cmd->add_option("--reg", bmodel.reg, "dynamic regressors, comma separated; NAME:q sets a max lag");
    bounds_cmd->add_option("--fixed", bmodel.fixed, "fixed regressors, comma separated");
    bounds_cmd->add_option("--events", bmodel.events, "event calendar CSV for the dummy");
    bounds_cmd->add_option("--dummy", bmodel.dummy, "name of the event dummy")->capture_default_str();
    bounds_cmd->add_option("--max-lag", bmodel.max_lag, "default max lag for regressors")->capture_default_str();
    bounds_cmd->add_option("--dep-max-lag", bmodel.dep_max_lag, "max lag order p of the dependent")
        ->capture_default_str();
    bounds_cmd->add_option("--orders", bmodel.orders, "fixed orders p,q1,q2,...");
    bounds_cmd->add_option("--case", bounds_case, "bounds case")->capture_default_str();
    bounds_cmd->add_option("--ic", bmodel.ic, "aic | sic")->capture_default_str();
    bounds_cmd->add_option("--cov", bmodel.cov, "classical | white | hac | hac:<L>")->capture_default_str();
    bounds_cmd->add_option("--bounds-table", bounds_table, "CSV of critical bounds: case,k,level,lower,upper");
    bounds_cmd->add_flag("--classical-bounds", bmodel.classical, "Wald F with classical covariance");
    bounds_cmd->callback([&] {
        action = [&] {
            std::optional<BoundsTable> table;
            if (!bounds_table.empty()) table = BoundsTable::load(bounds_table);
            const BoundsTable* tp = table ? &*table : nullptr;
            BoundsVerdict v;
            if (bounds_data.empty()) {
                if (!f_stat || !k_count) throw UsageError("bounds needs a data file or both --f and --k");
                v = bounds_verdict(*f_stat, *k_count, parse_bounds_case(bounds_case), tp);
            } else {
                if (f_stat || k_count) throw UsageError("--f/--k cannot be combined with a data file");
                if (bmodel.dep.empty() || bmodel.reg.empty()) throw UsageError("bounds on data needs --dep and --reg");
                bmodel.bounds_case = bounds_case;
                Dataset d = load({bounds_data, bounds_freq, ""});
                const ArdlSpec spec = model_spec(bmodel, d);
                v = bounds_test(estimate(bmodel, spec, d), tp, bmodel.classical);
            }
            Output o(out, bounds_out);
            o.add(bounds_stage(v));
            o.finish();
        };
    });

    ModelArgs emodel;
    auto* ecm_cmd = app.add_subcommand("ecm", "error-correction model on the selected ARDL orders");
    add_common(ecm_cmd, common);
    add_model(ecm_cmd, emodel);
    ecm_cmd->callback([&] {
        action = [&] {
            Dataset d = load(common);
            const ArdlSpec spec = model_spec(emodel, d);
            const ArdlFit fit = estimate(emodel, spec, d);
            const OlsFit levels = ols_fit(levels_regression(spec, emodel.levels_intercept), d);
            const EcmFit e = ecm_fit(fit.chosen_spec(), d, ect_from_levels(levels));
            Output o(out, common.out);
            o.add(ols_stage(levels, "levels", "Long-run levels regression: " + spec.dependent));
            o.separator();
            o.add(ecm_stage(e));
            o.finish();
        };
    });

    // report
    std::string config_path, report_out, report_plot;
    auto* report_cmd = app.add_subcommand("report", "full pipeline from a JSON config");
    report_cmd->add_option("--config", config_path, "pipeline configuration (JSON)")->required();
    report_cmd->add_option("--out", report_out, "machine-readable output (JSON lines)");
    report_cmd->add_option("--plot-cusum", report_plot, "write CUSUM plot data (CSV, or SVG for *.svg)");
    int report_status = 0;
    report_cmd->callback([&] {
        action = [&] {
            const RunReport r = full_report(load_config(config_path));
            out << render_text(r);
            if (!report_out.empty()) write_text_file(report_out, render_jsonl(r));
            if (!report_plot.empty() && r.cusum) emit_cusum_plot(*r.cusum, report_plot);
            for (const auto& s : r.stages)
                if (s.status == StageStatus::Failed) err << "tsecon: stage " << s.name << " failed: " << s.reason << '\n';
            report_status = r.exit_code();
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "tsecon: " << e.what() << "\n\n";
        const auto parsed = app.get_subcommands();
        err << (parsed.empty() ? app.help() : parsed.back()->help());
        return 1;
    }

    try {
        if (action) action();
    } catch (const Error& e) {
        err << "tsecon: error: " << e.what() << '\n';
        return exit_code_for(e.category());
    } catch (const std::exception& e) {
        err << "tsecon: error: " << e.what() << '\n';
        return 3;
    }
    return report_status;
}

}  // namespace tsecon
