#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tsecon/report.hpp"

namespace tsecon::report {

namespace {

using Row = std::vector<std::string>;

// Left-aligned first column, right-aligned others, two spaces between columns.
std::string table(const std::vector<Row>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        if (width.size() < r.size()) width.resize(r.size(), 0);
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            const std::string pad(width[c] - r[c].size(), ' ');
            if (c == 0) {
                line += r[c] + pad;
            } else {
                line += "  " + pad + r[c];
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
    }
    return out;
}

std::string integer(std::size_t v) { return std::to_string(v); }

std::string scientific(double v) {
    if (std::isnan(v)) return "NA";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", v);
    return buf;
}

Record stat(std::string_view stage, std::string name, double value, std::optional<double> se = std::nullopt,
            std::optional<double> p = std::nullopt) {
    return Record{std::string(stage), std::move(name), value, se, p};
}

Record text(std::string_view stage, std::string name, std::string value) {
    return Record{std::string(stage), std::move(name), std::move(value), std::nullopt, std::nullopt};
}

}  // namespace

std::string_view to_string(StageStatus s) noexcept {
    switch (s) {
        case StageStatus::Ok: return "ok";
        case StageStatus::Failed: return "failed";
        case StageStatus::Skipped: return "skipped";
    }
    return "ok";
}

std::string fixed(double v, int decimals) {
    if (std::isnan(v)) return "NA";
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s = buf;
    // "-0.0000" reads as a sign error in a table
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

std::string round_trip(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string starred(double coef, double p) { return fixed(coef) + significance_stars(p); }

StageReport describe_stage(std::span<const DescriptiveSummary> rows) {
    StageReport s = make_stage("describe");
    std::vector<Row> t{{""}};
    for (const auto& r : rows) t[0].push_back(r.name);
    auto add = [&](const std::string& label, auto get) {
        Row row{label};
        for (const auto& r : rows) row.push_back(get(r));
        t.push_back(std::move(row));
    };
    add("Mean", [](const auto& r) { return fixed(r.mean); });
    add("Median", [](const auto& r) { return fixed(r.median); });
    add("Maximum", [](const auto& r) { return fixed(r.maximum); });
    add("Minimum", [](const auto& r) { return fixed(r.minimum); });
    add("Std. Dev.", [](const auto& r) { return fixed(r.std_dev); });
    add("Skewness", [](const auto& r) { return fixed(r.skewness); });
    add("Kurtosis", [](const auto& r) { return fixed(r.kurtosis); });
    add("Jarque-Bera", [](const auto& r) { return fixed(r.jarque_bera); });
    add("Probability", [](const auto& r) { return fixed(r.jb_pvalue); });
    add("Observations", [](const auto& r) { return integer(r.n); });
    s.text = "Descriptive statistics\n" + table(t);
    for (const auto& r : rows) {
        const std::string n = r.name + ".";
        s.records.push_back(stat(s.name, n + "mean", r.mean));
        s.records.push_back(stat(s.name, n + "median", r.median));
        s.records.push_back(stat(s.name, n + "max", r.maximum));
        s.records.push_back(stat(s.name, n + "min", r.minimum));
        s.records.push_back(stat(s.name, n + "std_dev", r.std_dev));
        s.records.push_back(stat(s.name, n + "skewness", r.skewness));
        s.records.push_back(stat(s.name, n + "kurtosis", r.kurtosis));
        s.records.push_back(stat(s.name, n + "jarque_bera", r.jarque_bera, std::nullopt, r.jb_pvalue));
        s.records.push_back(stat(s.name, n + "observations", static_cast<double>(r.n)));
    }
    return s;
}

StageReport correlation_stage(const CorrelationMatrix& m) {
    StageReport s = make_stage("corr");
    std::vector<Row> t{{""}};
    for (const auto& n : m.names) t[0].push_back(n);
    for (std::size_t i = 0; i < m.names.size(); ++i) {
        Row row{m.names[i]};
        for (std::size_t j = 0; j <= i; ++j) row.push_back(fixed(m.entries(i, j)));
        t.push_back(std::move(row));
        for (std::size_t j = 0; j < i; ++j)
            s.records.push_back(stat(s.name, m.names[i] + "~" + m.names[j], m.entries(i, j)));
    }
    s.text = "Correlation matrix\n" + table(t);
    return s;
}

StageReport adf_stage(std::span<const AdfRow> rows) {
    StageReport s = make_stage("adf");
    std::vector<Row> t{{"", "Level", "", "", "", "First difference", "", "", ""},
                       {"Series", "t-Stat", "Prob.", "Lag", "DW", "t-Stat", "Prob.", "Lag", "DW"}};
    auto cells = [](Row& row, const AdfResult& r) {
        row.push_back(starred(r.statistic, r.p_value));
        row.push_back(fixed(r.p_value));
        row.push_back(integer(r.chosen_lag));
        row.push_back(fixed(r.durbin_watson));
    };
    auto recs = [&](const std::string& prefix, const AdfResult& r) {
        s.records.push_back(stat(s.name, prefix + ".tau", r.statistic, std::nullopt, r.p_value));
        s.records.push_back(stat(s.name, prefix + ".lag", static_cast<double>(r.chosen_lag)));
        s.records.push_back(stat(s.name, prefix + ".dw", r.durbin_watson));
        s.records.push_back(stat(s.name, prefix + ".n", static_cast<double>(r.n_effective)));
        s.records.push_back(text(s.name, prefix + ".deterministic", std::string(to_string(r.deterministic))));
    };
    for (const auto& r : rows) {
        Row row{r.series};
        cells(row, r.level);
        recs(r.series + ".level", r.level);
        if (r.difference) {
            cells(row, *r.difference);
            recs(r.series + ".diff", *r.difference);
        }
        t.push_back(std::move(row));
    }
    std::string det = rows.empty() ? "" : std::string(to_string(rows.front().level.deterministic));
    if (!rows.empty() && rows.front().difference) det += " / " + std::string(to_string(rows.front().difference->deterministic));
    s.text = "Augmented Dickey-Fuller unit root tests (deterministic: " + det + ")\n" + table(t) +
             "*, ** and *** reject a unit root at 10%, 5% and 1%.\n";
    return s;
}

StageReport lag_selection_stage(const LagSelectionTable& lt, std::span<const std::string> names) {
    StageReport s = make_stage("varselect");
    std::vector<Row> t{{"Lag", "LogL", "LR", "FPE", "AIC", "SC", "HQ"}};
    auto mark = [](std::string v, bool star) { return star ? v + "*" : v + " "; };
    for (const auto& r : lt.rows) {
        t.push_back({integer(r.lag), fixed(r.log_likelihood) + " ",
                     mark(r.lr ? fixed(*r.lr) : "NA", r.lag == lt.star_lr && r.lr.has_value()),
                     mark(scientific(r.fpe), r.lag == lt.star_fpe), mark(fixed(r.aic), r.lag == lt.star_aic),
                     mark(fixed(r.sc), r.lag == lt.star_sc), mark(fixed(r.hq), r.lag == lt.star_hq)});
        const std::string p = "lag" + std::to_string(r.lag) + ".";
        s.records.push_back(stat(s.name, p + "logl", r.log_likelihood));
        if (r.lr) s.records.push_back(stat(s.name, p + "lr", *r.lr, std::nullopt, r.lr_pvalue));
        s.records.push_back(stat(s.name, p + "fpe", r.fpe));
        s.records.push_back(stat(s.name, p + "aic", r.aic));
        s.records.push_back(stat(s.name, p + "sc", r.sc));
        s.records.push_back(stat(s.name, p + "hq", r.hq));
    }
    for (const auto& [k, v] : {std::pair<const char*, std::size_t>{"star.lr", lt.star_lr},
                               {"star.fpe", lt.star_fpe},
                               {"star.aic", lt.star_aic},
                               {"star.sc", lt.star_sc},
                               {"star.hq", lt.star_hq}}) {
        s.records.push_back(stat(s.name, k, static_cast<double>(v)));
    }
    std::string series;
    for (const auto& n : names) series += (series.empty() ? "" : ", ") + n;
    s.text = "VAR lag order selection (" + series + "; n = " + integer(lt.n_effective) + ")\n" + table(t) +
             "* indicates the lag selected by each criterion.\n";
    return s;
}

StageReport granger_stage(std::span<const GrangerResult> rows) {
    StageReport s = make_stage("granger");
    std::vector<Row> t{{"Null hypothesis", "Lags", "Obs", "F-Statistic", "Prob."}};
    for (const auto& g : rows) {
        const std::string null = g.cause + " does not Granger cause " + g.effect;
        t.push_back({null, integer(g.df1), integer(g.n_effective), starred(g.f_statistic, g.p_value), fixed(g.p_value)});
        s.records.push_back(stat(s.name, g.cause + "->" + g.effect + ".lag" + std::to_string(g.df1) + ".F",
                                 g.f_statistic, std::nullopt, g.p_value));
        s.records.push_back(stat(s.name, g.cause + "->" + g.effect + ".lag" + std::to_string(g.df1) + ".df2",
                                 static_cast<double>(g.df2)));
    }
    s.text = "Granger causality tests\n" + table(t);
    return s;
}

std::string coefficient_table(const OlsFit& fit, std::string_view title) {
    std::string out(title);
    out += '\n';
    if (!fit.periods.empty()) {
        out += "Sample: " + fit.periods.front().label() + " " + fit.periods.back().label() +
               "  Observations: " + integer(fit.n) + "  Covariance: " + to_string(fit.covariance);
        if (fit.covariance.kind == CovarianceKind::Hac) out += " (bandwidth " + integer(fit.hac_bandwidth) + ")";
        out += '\n';
    }
    std::vector<Row> t{{"Variable", "Coefficient", "Prob."}};
    for (std::size_t j = 0; j < fit.k; ++j) {
        t.push_back({fit.names[j], starred(fit.coefficients[j], fit.p_values[j]), fixed(fit.p_values[j])});
        t.push_back({"", "(" + fixed(fit.std_errors[j]) + ")" + std::string(significance_stars(fit.p_values[j]).size(), ' '), ""});
    }
    out += table(t);
    std::vector<Row> f{{fit.centered_r_squared ? "R-squared" : "R-squared (uncentered)", fixed(fit.r_squared)},
                       {"Adjusted R-squared", fixed(fit.adj_r_squared)},
                       {"S.E. of regression", fixed(fit.sigma)},
                       {"Sum squared resid", fixed(fit.ssr)},
                       {"Log likelihood", fixed(fit.log_likelihood)},
                       {"Durbin-Watson stat", fixed(fit.durbin_watson)}};
    out += table(f);
    return out;
}

std::vector<Record> coefficient_records(const OlsFit& fit, std::string_view stage, std::string_view prefix) {
    std::vector<Record> r;
    const std::string p(prefix);
    for (std::size_t j = 0; j < fit.k; ++j)
        r.push_back(stat(stage, p + fit.names[j], fit.coefficients[j], fit.std_errors[j], fit.p_values[j]));
    r.push_back(stat(stage, p + "r_squared", fit.r_squared));
    r.push_back(stat(stage, p + "adj_r_squared", fit.adj_r_squared));
    r.push_back(stat(stage, p + "ssr", fit.ssr));
    r.push_back(stat(stage, p + "log_likelihood", fit.log_likelihood));
    r.push_back(stat(stage, p + "durbin_watson", fit.durbin_watson));
    r.push_back(stat(stage, p + "n", static_cast<double>(fit.n)));
    return r;
}

StageReport ols_stage(const OlsFit& fit, std::string_view stage, std::string_view title) {
    StageReport s = make_stage(std::string(stage));
    s.text = coefficient_table(fit, title);
    s.records = coefficient_records(fit, stage);
    return s;
}

StageReport ardl_stage(const ArdlFit& fit) {
    StageReport s = make_stage("ardl");
    std::string title = "ARDL search: selected " + fit.orders.label() + " by " +
                        std::string(to_string(fit.spec.criterion)) + " over " + integer(fit.trace.size()) +
                        " models\nDependent variable: D(" + fit.spec.dependent + ")";
    s.text = coefficient_table(fit.fit, title);
    s.records = coefficient_records(fit.fit, s.name);
    s.records.push_back(stat(s.name, "order.p", static_cast<double>(fit.orders.p)));
    for (std::size_t j = 0; j < fit.orders.q.size(); ++j)
        s.records.push_back(stat(s.name, "order." + fit.spec.regressors[j].name, static_cast<double>(fit.orders.q[j])));
    s.records.push_back(stat(s.name, "grid_size", static_cast<double>(fit.trace.size())));
    return s;
}

StageReport bounds_stage(const BoundsVerdict& v) {
    StageReport s = make_stage("bounds");
    std::string out = "Bounds test (case " + std::string(to_string(v.bounds_case)) + ", k = " + integer(v.k) + ")\n";
    out += "F-statistic: " + fixed(v.f_statistic) + "\n";
    std::vector<Row> t{{"Significance", "I(0) bound", "I(1) bound", "Outcome"}};
    for (const auto& l : v.levels) {
        const std::string sig = fixed(l.critical.significance * 100.0, 0) + "%";
        t.push_back({sig, fixed(l.critical.lower, 2), fixed(l.critical.upper, 2), std::string(to_string(l.outcome))});
        s.records.push_back(text(s.name, "outcome." + sig, std::string(to_string(l.outcome))));
    }
    out += table(t);
    out += "Verdict: " + v.summary() + "\n";
    s.text = out;
    s.records.insert(s.records.begin(),
                     stat(s.name, "F", v.f_statistic, std::nullopt, v.wald ? std::optional<double>(v.wald->p) : std::nullopt));
    s.records.insert(s.records.begin() + 1, stat(s.name, "k", static_cast<double>(v.k)));
    s.records.push_back(text(s.name, "verdict", v.summary()));
    return s;
}

StageReport long_run_stage(std::span<const LongRunMultiplier> rows, std::string_view dependent) {
    StageReport s = make_stage("longrun");
    std::vector<Row> t{{"Variable", "Multiplier", "Prob."}};
    for (const auto& r : rows) {
        t.push_back({r.name, starred(r.multiplier, r.p_value), fixed(r.p_value)});
        t.push_back({"", "(" + fixed(r.std_error) + ")" + std::string(significance_stars(r.p_value).size(), ' '), ""});
        s.records.push_back(stat(s.name, r.name, r.multiplier, r.std_error, r.p_value));
    }
    s.text = "Long-run multipliers (dependent: " + std::string(dependent) + ")\n" + table(t);
    return s;
}

StageReport ecm_stage(const EcmFit& e) {
    StageReport s = make_stage("ecm");
    s.text = coefficient_table(e.fit, "Error-correction model");
    s.text += "Adjustment: " + e.interpretation + "; " + (e.valid ? "valid" : "not valid") +
              " (requires significance at 5% and -1 < lambda < 0)\n";
    s.records = coefficient_records(e.fit, s.name);
    s.records.push_back(stat(s.name, "lambda", e.lambda, e.lambda_se, e.lambda_p));
    s.records.push_back(text(s.name, "valid", e.valid ? "true" : "false"));
    s.records.push_back(text(s.name, "interpretation", e.interpretation));
    return s;
}

StageReport diagnostics_stage(const DiagnosticsReport& d) {
    StageReport s = make_stage("diagnostics");
    std::vector<Row> t{{"Test", "Statistic", "df", "Prob."}};
    if (d.durbin_watson) {
        t.push_back({"Durbin-Watson", fixed(*d.durbin_watson), "", ""});
        s.records.push_back(stat(s.name, "durbin_watson", *d.durbin_watson));
    }
    auto lm = [&](const char* label, const char* key, const std::optional<LmTest>& x) {
        if (!x) return;
        t.push_back({label, fixed(x->statistic), integer(x->df), fixed(x->p)});
        s.records.push_back(stat(s.name, key, x->statistic, std::nullopt, x->p));
    };
    lm("Breusch-Godfrey LM", "breusch_godfrey", d.bg_lm);
    lm("Breusch-Pagan-Godfrey", "breusch_pagan_godfrey", d.bpg);
    lm("White", "white", d.white);
    s.text = "Residual diagnostics\n" + table(t);
    return s;
}

StageReport cusum_stage(const CusumResult& c) {
    StageReport s = make_stage("cusum");
    s.text = "CUSUM stability test (a = " + fixed(c.constant, 3) + "): " + (c.stable ? "stable" : "unstable");
    if (c.first_crossing) s.text += ", first crossing at " + c.first_crossing->label();
    s.text += "\n";
    s.records.push_back(text(s.name, "stable", c.stable ? "true" : "false"));
    s.records.push_back(stat(s.name, "sigma", c.sigma));
    s.records.push_back(stat(s.name, "points", static_cast<double>(c.path.size())));
    if (c.first_crossing) s.records.push_back(text(s.name, "first_crossing", c.first_crossing->label()));
    return s;
}

std::string cusum_csv(const CusumResult& c) {
    std::string out = "period,W,lower,upper\n";
    for (std::size_t i = 0; i < c.path.size(); ++i) {
        out += c.periods[i].label() + "," + round_trip(c.path[i]) + "," + round_trip(c.lower[i]) + "," +
               round_trip(c.upper[i]) + "\n";
    }
    return out;
}

std::string cusum_svg(const CusumResult& c) {
    constexpr double width = 800.0, height = 400.0, margin = 40.0;
    const std::size_t n = c.path.size();
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        lo = std::min({lo, c.lower[i], c.path[i]});
        hi = std::max({hi, c.upper[i], c.path[i]});
    }
    if (hi == lo) hi = lo + 1.0;
    auto px = [&](std::size_t i) {
        return margin + (n > 1 ? static_cast<double>(i) / static_cast<double>(n - 1) : 0.0) * (width - 2 * margin);
    };
    auto py = [&](double v) { return height - margin - (v - lo) / (hi - lo) * (height - 2 * margin); };
    auto line = [&](const std::vector<double>& v, const char* colour, const char* dash) {
        std::string pts;
        char buf[48];
        for (std::size_t i = 0; i < n; ++i) {
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(i), py(v[i]));
            pts += buf;
        }
        return std::string("<polyline fill=\"none\" stroke=\"") + colour + "\" stroke-width=\"1.5\"" + dash +
               " points=\"" + pts + "\"/>\n";
    };
    char head[256];
    std::snprintf(head, sizeof head,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  width, height, width, height);
    std::string out = head;
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    char axis[160];
    std::snprintf(axis, sizeof axis, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#999\"/>\n", margin,
                  py(0.0), width - margin, py(0.0));
    out += axis;
    out += line(c.upper, "#c0392b", " stroke-dasharray=\"6,4\"");
    out += line(c.lower, "#c0392b", " stroke-dasharray=\"6,4\"");
    out += line(c.path, "#1f4e79", "");
    if (n > 0) {
        out += "<text x=\"" + fixed(margin, 0) + "\" y=\"" + fixed(margin / 2, 0) + "\" font-family=\"sans-serif\" font-size=\"13\">CUSUM " +
               c.periods.front().label() + " to " + c.periods.back().label() + " (" + fixed(c.constant, 3) +
               " boundaries)</text>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("failed writing " + path.string());
}

void emit_cusum_plot(const CusumResult& c, const std::filesystem::path& path) {
    write_text_file(path, path.extension() == ".svg" ? cusum_svg(c) : cusum_csv(c));
}

std::string jsonl(std::span<const Record> records) {
    std::string out;
    auto number = [](std::optional<double> v) -> nlohmann::ordered_json {
        if (!v || !std::isfinite(*v)) return nullptr;
        return *v;
    };
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["stage"] = r.stage;
        j["name"] = r.name;
        if (const double* d = std::get_if<double>(&r.value)) {
            j["value"] = number(*d);
        } else {
            j["value"] = std::get<std::string>(r.value);
        }
        j["se"] = number(r.se);
        j["p"] = number(r.p);
        out += j.dump() + '\n';
    }
    return out;
}

}  // namespace tsecon::report
