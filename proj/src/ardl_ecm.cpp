#include "tsecon/ardl_ecm.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "text.hpp"
#include "tsecon/distributions.hpp"
#include "tsecon/error.hpp"
#include "tsecon/kernels.hpp"

namespace tsecon {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void validate_spec(const ArdlSpec& spec) {
    if (spec.regressors.empty()) throw UsageError("ARDL needs at least one dynamic regressor");
    if (spec.dependent_max_lag == 0) throw EmptyGrid("dependent lag order must be at least 1");
    std::vector<std::string> seen{spec.dependent};
    auto check = [&](const std::string& name) {
        if (std::find(seen.begin(), seen.end(), name) != seen.end()) {
            throw UsageError("series '" + name + "' appears twice in the ARDL specification");
        }
        seen.push_back(name);
    };
    for (const auto& r : spec.regressors) check(r.name);
    for (const auto& f : spec.fixed) check(f);
    if (spec.deterministic != BoundsCase::I && spec.deterministic != BoundsCase::III) {
        throw UsageError("only cases I and III can be estimated");
    }
}

void validate_orders(const ArdlSpec& spec, const ArdlOrders& orders) {
    if (orders.p == 0) throw UsageError("dependent lag order must be at least 1");
    if (orders.q.size() != spec.regressors.size()) {
        throw UsageError("ARDL orders do not match the number of regressors");
    }
}

Term level(const std::string& s) { return Term{s, 1, false}; }
Term delta(const std::string& s, std::size_t lag) { return Term{s, lag, true}; }

void append_short_run(std::vector<Term>& terms, const ArdlSpec& spec, const ArdlOrders& orders) {
    for (std::size_t i = 1; i < orders.p; ++i) terms.push_back(delta(spec.dependent, i));
    for (std::size_t j = 0; j < spec.regressors.size(); ++j)
        for (std::size_t i = 0; i < orders.q[j]; ++i) terms.push_back(delta(spec.regressors[j].name, i));
}

void append_levels(std::vector<Term>& terms, const ArdlSpec& spec) {
    for (const auto& r : spec.regressors) terms.push_back(level(r.name));
    for (const auto& f : spec.fixed) terms.push_back(level(f));
    terms.push_back(level(spec.dependent));
}

double two_sided_p(double t, double df) {
    if (std::isnan(t)) return kNaN;
    if (df <= 0.0) return 2.0 * (1.0 - normal_cdf(std::abs(t)));
    return 2.0 * t_sf(std::abs(t), df);
}

bool lexicographically_less(const ArdlOrders& a, const ArdlOrders& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
}

// Grid evaluation on one common sample. All candidate columns are scaled to
// unit norm and their Gram matrix formed once; the depth-first walk over the
// grid grows a Cholesky factor one column at a time, so each candidate costs a
// single triangular solve. SSR = y'y − ||z||² with L z = X'y.
class GridSearch {
public:
    GridSearch(const ArdlSpec& spec, const Dataset& data) : spec_(spec) {
        ArdlOrders widest{spec.dependent_max_lag, {}};
        for (const auto& r : spec.regressors) widest.q.push_back(r.max_lag);

        RegressionSpec all;
        all.dependent = delta(spec.dependent, 0);
        append_levels(all.terms, spec);
        const std::size_t levels = all.terms.size();
        append_short_run(all.terms, spec, widest);
        all.intercept = spec.deterministic == BoundsCase::III;
        design_ = build_design(all, data);

        const std::size_t k = design_.k();
        const std::size_t n = design_.n();
        Matrix x = design_.x;
        for (std::size_t c = 0; c < k; ++c) {
            auto col = x.col(c);
            const double norm = std::sqrt(kernels::dot(col, col));
            if (norm == 0.0) throw RankDeficient("regressor " + design_.names[c] + " is identically zero", c);
            for (double& v : col) v /= norm;
        }
        gram_ = gram(x);
        xty_.resize(k);
        for (std::size_t c = 0; c < k; ++c) xty_[c] = kernels::dot(x.col(c), design_.y);
        yty_ = kernels::dot(design_.y, design_.y);
        n_ = n;

        for (std::size_t c = 0; c < levels; ++c) base_.push_back(c);
        std::size_t c = levels;
        for (std::size_t i = 1; i < widest.p; ++i) dy_.push_back(c++);
        dx_.resize(spec.regressors.size());
        for (std::size_t j = 0; j < spec.regressors.size(); ++j)
            for (std::size_t i = 0; i < widest.q[j]; ++i) dx_[j].push_back(c++);
        if (all.intercept) base_.push_back(c++);

        factor_.assign(k * k, 0.0);
        z_.assign(k, 0.0);
        zz_.assign(k + 1, 0.0);
        sel_.assign(k, 0);
    }

    std::vector<CriterionTraceEntry> run() {
        std::vector<CriterionTraceEntry> trace;
        std::size_t total = spec_.dependent_max_lag;
        for (const auto& r : spec_.regressors) total *= r.max_lag + 1;
        trace.reserve(total);

        size_ = 0;
        for (std::size_t c : base_) append(c);
        current_.q.assign(spec_.regressors.size(), 0);
        for (std::size_t p = 1; p <= spec_.dependent_max_lag; ++p) {
            if (p > 1) append(dy_[p - 2]);
            current_.p = p;
            walk(0, trace);
        }
        return trace;
    }

    [[nodiscard]] std::size_t sample_start() const noexcept { return design_.first_row; }

private:
    void walk(std::size_t j, std::vector<CriterionTraceEntry>& trace) {
        if (j == dx_.size()) {
            trace.push_back({current_, criterion()});
            return;
        }
        const std::size_t entry = size_;
        for (std::size_t q = 0; q <= spec_.regressors[j].max_lag; ++q) {
            if (q > 0) append(dx_[j][q - 1]);
            current_.q[j] = q;
            walk(j + 1, trace);
        }
        size_ = entry;
        current_.q[j] = 0;
    }

    double criterion() const {
        const double ssr = std::max(yty_ - zz_[size_], std::numeric_limits<double>::min());
        const double n = static_cast<double>(n_);
        const double ll = -0.5 * n * (1.0 + std::log(2.0 * std::numbers::pi) + std::log(ssr / n));
        return information_criterion(ll, n_, size_, spec_.criterion);
    }

    void append(std::size_t c) {
        const std::size_t k = design_.k();
        const std::size_t m = size_;
        double* row = &factor_[m * k];
        double ss = 0.0;
        double zdot = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double* li = &factor_[i * k];
            double v = gram_(sel_[i], c);
            for (std::size_t t = 0; t < i; ++t) v -= li[t] * row[t];
            v /= li[i];
            row[i] = v;
            ss += v * v;
            zdot += v * z_[i];
        }
        const double d = gram_(c, c) - ss;
        if (!(d > 1e-13)) {
            throw RankDeficient("regressor " + design_.names[c] + " is collinear with earlier regressors", c);
        }
        row[m] = std::sqrt(d);
        z_[m] = (xty_[c] - zdot) / row[m];
        zz_[m + 1] = zz_[m] + z_[m] * z_[m];
        sel_[m] = c;
        ++size_;
    }

    const ArdlSpec& spec_;
    Design design_;
    Matrix gram_;
    std::vector<double> xty_;
    double yty_ = 0.0;
    std::size_t n_ = 0;
    std::vector<std::size_t> base_;
    std::vector<std::size_t> dy_;
    std::vector<std::vector<std::size_t>> dx_;

    std::vector<double> factor_;  // row-major lower triangle, stride k
    std::vector<double> z_;
    std::vector<double> zz_;
    std::vector<std::size_t> sel_;
    std::size_t size_ = 0;
    ArdlOrders current_;
};

}  // namespace

std::string_view to_string(BoundsCase c) noexcept {
    switch (c) {
        case BoundsCase::I: return "I";
        case BoundsCase::II: return "II";
        case BoundsCase::III: return "III";
        case BoundsCase::IV: return "IV";
        case BoundsCase::V: return "V";
    }
    return "I";
}

BoundsCase parse_bounds_case(std::string_view text) {
    static constexpr std::array<std::string_view, 5> roman{"I", "II", "III", "IV", "V"};
    static constexpr std::array<std::string_view, 5> lower{"i", "ii", "iii", "iv", "v"};
    static constexpr std::array<std::string_view, 5> arabic{"1", "2", "3", "4", "5"};
    if (text.starts_with("case_") || text.starts_with("case ")) text.remove_prefix(5);
    for (std::size_t i = 0; i < 5; ++i) {
        if (text == roman[i] || text == lower[i] || text == arabic[i]) return static_cast<BoundsCase>(i + 1);
    }
    throw UsageError("unknown bounds case '" + std::string(text) + "' (I..V)");
}

std::size_t ArdlOrders::total() const noexcept {
    std::size_t t = p;
    for (std::size_t v : q) t += v;
    return t;
}

std::string ArdlOrders::label() const {
    std::string s = "ARDL(" + std::to_string(p);
    for (std::size_t v : q) s += ", " + std::to_string(v);
    return s + ")";
}

ArdlSpec ArdlFit::chosen_spec() const {
    ArdlSpec s = spec;
    s.dependent_max_lag = orders.p;
    for (std::size_t j = 0; j < s.regressors.size(); ++j) s.regressors[j].max_lag = orders.q[j];
    return s;
}

std::optional<double> ArdlFit::phi(std::string_view series) const {
    for (std::size_t i = 0; i < level_series.size(); ++i)
        if (level_series[i] == series) return fit.coefficients[level_indices[i]];
    return std::nullopt;
}

RegressionSpec ardl_regression(const ArdlSpec& spec, const ArdlOrders& orders, std::size_t sample_start) {
    validate_spec(spec);
    validate_orders(spec, orders);
    RegressionSpec r;
    r.dependent = delta(spec.dependent, 0);
    append_short_run(r.terms, spec, orders);
    append_levels(r.terms, spec);
    r.intercept = spec.deterministic == BoundsCase::III;
    r.covariance = spec.covariance;
    r.sample_start = sample_start;
    return r;
}

ArdlFit ardl_fit(const ArdlSpec& spec, const ArdlOrders& orders, const Dataset& data) {
    ArdlFit out;
    out.spec = spec;
    out.orders = orders;
    out.regression = ardl_regression(spec, orders);
    out.design = build_design(out.regression, data);
    out.fit = fit_design(out.design, spec.covariance);

    std::size_t short_run = orders.p - 1;
    for (std::size_t q : orders.q) short_run += q;
    for (std::size_t i = 0; i < short_run; ++i) out.short_run_indices.push_back(i);
    for (const auto& r : spec.regressors) out.level_series.push_back(r.name);
    for (const auto& f : spec.fixed) out.level_series.push_back(f);
    out.level_series.push_back(spec.dependent);
    for (std::size_t i = 0; i < out.level_series.size(); ++i) out.level_indices.push_back(short_run + i);
    out.dependent_level_index = out.level_indices.back();
    return out;
}

ArdlFit ardl_search(const ArdlSpec& spec, const Dataset& data) {
    validate_spec(spec);
    GridSearch search(spec, data);
    auto trace = search.run();
    if (trace.empty()) throw EmptyGrid("ARDL lag grid is empty");

    std::size_t best = 0;
    for (std::size_t i = 1; i < trace.size(); ++i) {
        const auto& a = trace[i];
        const auto& b = trace[best];
        if (a.value < b.value ||
            (a.value == b.value && (a.orders.total() < b.orders.total() ||
                                    (a.orders.total() == b.orders.total() &&
                                     lexicographically_less(a.orders, b.orders))))) {
            best = i;
        }
    }
    ArdlFit out = ardl_fit(spec, trace[best].orders, data);
    out.trace = std::move(trace);
    return out;
}

std::string_view to_string(BoundsOutcome o) noexcept {
    switch (o) {
        case BoundsOutcome::Cointegrated: return "cointegrated";
        case BoundsOutcome::Inconclusive: return "inconclusive";
        case BoundsOutcome::NotCointegrated: return "not cointegrated";
    }
    return "inconclusive";
}

namespace {

constexpr std::array<double, 3> kBoundsLevels{0.10, 0.05, 0.01};

std::optional<std::size_t> level_slot(double significance) {
    for (std::size_t i = 0; i < kBoundsLevels.size(); ++i)
        if (std::abs(significance - kBoundsLevels[i]) < 1e-9) return i;
    return std::nullopt;
}

}  // namespace

BoundsTable BoundsTable::embedded() {
    BoundsTable t;
    t.add(BoundsCase::I, 5, {0.10, 1.81, 2.93});
    t.add(BoundsCase::I, 5, {0.05, 2.14, 3.34});
    t.add(BoundsCase::I, 5, {0.01, 2.82, 4.21});
    return t;
}

void BoundsTable::add(BoundsCase c, std::size_t k, BoundsCritical row) {
    if (!level_slot(row.significance)) throw UsageError("bounds level must be 10%, 5% or 1%");
    if (!(row.lower <= row.upper)) throw UsageError("lower bound exceeds upper bound");
    entries_.push_back({c, k, row});
}

std::optional<std::array<BoundsCritical, 3>> BoundsTable::lookup(BoundsCase c, std::size_t k) const {
    std::array<std::optional<BoundsCritical>, 3> found;
    for (const auto& e : entries_) {
        if (e.bounds_case == c && e.k == k) found[*level_slot(e.row.significance)] = e.row;
    }
    std::array<BoundsCritical, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!found[i]) return std::nullopt;
        out[i] = *found[i];
    }
    return out;
}

BoundsTable BoundsTable::parse(std::string_view csv) {
    using namespace detail;
    const auto lines = split_lines(csv);
    if (lines.empty()) throw EmptyError("bounds table is empty");
    const auto header = split_fields(lines[0]);
    static constexpr std::array<std::string_view, 5> expected{"case", "k", "level", "lower", "upper"};
    if (header.size() != expected.size()) throw ParseError("bounds table header must be case,k,level,lower,upper", 1, 1);
    for (std::size_t c = 0; c < expected.size(); ++c) {
        std::string h(unquote(header[c]));
        std::transform(h.begin(), h.end(), h.begin(), [](unsigned char ch) { return std::tolower(ch); });
        if (h != expected[c]) throw ParseError("expected column '" + std::string(expected[c]) + "'", 1, c + 1);
    }

    BoundsTable t;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (trim(lines[r]).empty()) continue;
        const auto f = split_fields(lines[r]);
        const std::size_t row = r + 1;
        if (f.size() != expected.size()) throw ParseError("expected 5 fields", row, f.size() + 1);

        BoundsCase bc;
        try {
            bc = parse_bounds_case(trim(f[0]));
        } catch (const UsageError&) {
            throw ParseError("bad bounds case '" + std::string(trim(f[0])) + "'", row, 1);
        }
        const auto kv = parse_decimal(trim(f[1]));
        if (!kv || *kv < 0 || *kv != std::floor(*kv)) throw ParseError("k must be a non-negative integer", row, 2);

        std::string_view lv = trim(f[2]);
        bool percent = false;
        if (!lv.empty() && lv.back() == '%') {
            lv.remove_suffix(1);
            percent = true;
        }
        auto level = parse_decimal(lv);
        if (!level) throw ParseError("bad significance level", row, 3);
        if (percent || *level > 1.0) *level /= 100.0;
        if (!level_slot(*level)) throw ParseError("significance level must be 10%, 5% or 1%", row, 3);

        const auto lo = parse_decimal(trim(f[3]));
        if (!lo) throw ParseError("bad lower bound", row, 4);
        const auto hi = parse_decimal(trim(f[4]));
        if (!hi) throw ParseError("bad upper bound", row, 5);
        if (*lo > *hi) throw ParseError("lower bound exceeds upper bound", row, 4);
        t.add(bc, static_cast<std::size_t>(*kv), {kBoundsLevels[*level_slot(*level)], *lo, *hi});
    }
    return t;
}

BoundsTable BoundsTable::load(const std::filesystem::path& path) { return parse(detail::read_file(path)); }

std::string BoundsVerdict::summary() const {
    for (std::size_t i = levels.size(); i-- > 0;) {
        if (levels[i].outcome == BoundsOutcome::Cointegrated) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "cointegrated at %g%%", levels[i].critical.significance * 100.0);
            return buf;
        }
    }
    if (levels[0].outcome == BoundsOutcome::NotCointegrated) return "no cointegration";
    return "inconclusive";
}

BoundsVerdict bounds_verdict(double f, std::size_t k, BoundsCase bounds_case, const BoundsTable* user_table) {
    if (!std::isfinite(f)) throw UsageError("bounds F statistic must be finite");
    std::optional<std::array<BoundsCritical, 3>> rows;
    if (user_table) rows = user_table->lookup(bounds_case, k);
    if (!rows) rows = BoundsTable::embedded().lookup(bounds_case, k);
    if (!rows) {
        throw MissingBoundsTable("no critical bounds for case " + std::string(to_string(bounds_case)) +
                                 " with k=" + std::to_string(k) + "; supply a bounds table");
    }
    BoundsVerdict v;
    v.f_statistic = f;
    v.k = k;
    v.bounds_case = bounds_case;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& c = (*rows)[i];
        v.levels[i].critical = c;
        v.levels[i].outcome = f > c.upper   ? BoundsOutcome::Cointegrated
                              : f < c.lower ? BoundsOutcome::NotCointegrated
                                            : BoundsOutcome::Inconclusive;
    }
    return v;
}

BoundsVerdict bounds_test(const ArdlFit& fit, const BoundsTable* user_table, bool force_classical) {
    const WaldResult w = force_classical
                             ? wald_f(fit_design(fit.design, CovarianceSpec::classical()), fit.level_indices)
                             : wald_f(fit.fit, fit.level_indices);
    BoundsVerdict v = bounds_verdict(w.f, fit.level_indices.size() - 1, fit.spec.deterministic, user_table);
    v.wald = w;
    return v;
}

std::vector<LongRunMultiplier> long_run_multipliers(std::span<const std::string> names,
                                                    std::span<const double> phi, double phi_dep,
                                                    const Matrix* cov, double df) {
    if (names.size() != phi.size()) throw UsageError("one name per level coefficient required");
    const std::size_t m = phi.size();
    if (cov && (cov->rows() != m + 1 || cov->cols() != m + 1)) {
        throw UsageError("level covariance must be (m+1)x(m+1)");
    }
    double scale = std::abs(phi_dep);
    for (double v : phi) scale = std::max(scale, std::abs(v));
    if (!(std::abs(phi_dep) >= 1e-12 * scale) || phi_dep == 0.0) {
        throw DegenerateDenominator("coefficient on the lagged dependent level is numerically zero");
    }

    std::vector<LongRunMultiplier> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto& e = out[i];
        e.name = names[i];
        e.multiplier = -phi[i] / phi_dep;
        if (!cov) {
            e.std_error = e.t_stat = e.p_value = kNaN;
            continue;
        }
        // gradient of −φ_i/φ_dep with respect to (φ_i, φ_dep)
        const double gi = -1.0 / phi_dep;
        const double gd = phi[i] / (phi_dep * phi_dep);
        const double var = gi * gi * (*cov)(i, i) + 2.0 * gi * gd * (*cov)(i, m) + gd * gd * (*cov)(m, m);
        e.std_error = std::sqrt(std::max(var, 0.0));
        e.t_stat = e.std_error > 0.0 ? e.multiplier / e.std_error : kNaN;
        e.p_value = two_sided_p(e.t_stat, df);
    }
    return out;
}

std::vector<LongRunMultiplier> long_run(const ArdlFit& fit) {
    const std::size_t m = fit.level_indices.size() - 1;
    std::vector<std::string> names(fit.level_series.begin(), fit.level_series.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<double> phi(m);
    for (std::size_t i = 0; i < m; ++i) phi[i] = fit.fit.coefficients[fit.level_indices[i]];
    Matrix cov(m + 1, m + 1);
    for (std::size_t a = 0; a <= m; ++a)
        for (std::size_t b = 0; b <= m; ++b) cov(a, b) = fit.fit.cov(fit.level_indices[a], fit.level_indices[b]);
    return long_run_multipliers(names, phi, fit.fit.coefficients[fit.dependent_level_index], &cov,
                                static_cast<double>(fit.fit.df_resid()));
}

std::string adjustment_interpretation(double lambda) {
    char buf[96];
    if (lambda < 0.0) {
        std::snprintf(buf, sizeof buf, "corrects %.2f%% of previous-period disequilibrium%s", -lambda * 100.0,
                      lambda <= -1.0 ? " (overshooting)" : "");
    } else {
        std::snprintf(buf, sizeof buf, "no correction toward equilibrium (adjustment %.4f)", lambda);
    }
    return buf;
}

EcmFit ecm_fit(const ArdlSpec& spec, const Dataset& data, const TimeSeries& longrun_residuals) {
    validate_spec(spec);
    if (longrun_residuals.frequency() != data.frequency()) {
        throw MisalignedResiduals("long-run residuals have a different frequency from the data");
    }
    const auto& index = data.index();
    const auto first = std::lower_bound(index.begin(), index.end(), longrun_residuals.index().front());
    if (first == index.end() || *first != longrun_residuals.index().front()) {
        throw MisalignedResiduals("long-run residuals start at " + longrun_residuals.index().front().label() +
                                  ", which is not in the data index");
    }
    const auto r0 = static_cast<std::size_t>(first - index.begin());

    ArdlOrders orders{spec.dependent_max_lag, {}};
    for (const auto& r : spec.regressors) orders.q.push_back(r.max_lag);
    RegressionSpec rs;
    rs.dependent = delta(spec.dependent, 0);
    append_short_run(rs.terms, spec, orders);
    for (const auto& f : spec.fixed) rs.terms.push_back(delta(f, 0));
    rs.intercept = spec.deterministic == BoundsCase::III;
    rs.covariance = spec.covariance;
    rs.sample_start = r0 + 1;

    Design d = build_design(rs, data);
    const std::size_t n = d.n();
    std::vector<double> ect(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t pos = d.first_row + r - 1 - r0;
        if (pos >= longrun_residuals.size()) {
            throw MisalignedResiduals("no long-run residual for " + index[d.first_row + r - 1].label());
        }
        ect[r] = longrun_residuals[pos];
    }
    if (n <= d.k() + 1) {
        throw TooFewObservations("effective sample of " + std::to_string(n) + " observations does not exceed " +
                                 std::to_string(d.k() + 1) + " regressors");
    }
    d.x.append_col(ect);
    d.names.push_back("ECT(-1)");

    EcmFit e;
    e.fit = fit_design(d, spec.covariance);
    e.ect_index = d.k() - 1;
    e.lambda = e.fit.coefficients[e.ect_index];
    e.lambda_se = e.fit.std_errors[e.ect_index];
    e.lambda_t = e.fit.t_stats[e.ect_index];
    e.lambda_p = e.fit.p_values[e.ect_index];
    e.valid = e.lambda_p < 0.05 && e.lambda > -1.0 && e.lambda < 0.0;
    e.interpretation = adjustment_interpretation(e.lambda);
    return e;
}

TimeSeries ect_from_levels(const OlsFit& levels_fit) {
    return TimeSeries("ECT", levels_fit.frequency, levels_fit.periods, levels_fit.residuals);
}

RegressionSpec levels_regression(const ArdlSpec& spec, bool intercept) {
    RegressionSpec r;
    r.dependent = Term{spec.dependent, 0, false};
    for (const auto& x : spec.regressors) r.terms.push_back(Term{x.name, 0, false});
    for (const auto& f : spec.fixed) r.terms.push_back(Term{f, 0, false});
    r.intercept = intercept;
    r.covariance = spec.covariance;
    return r;
}

}  // namespace tsecon
