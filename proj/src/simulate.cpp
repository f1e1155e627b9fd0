#include "tsecon/simulate.hpp"

#include <cmath>

#include "tsecon/error.hpp"

namespace tsecon::sim {

std::vector<Period> make_index(std::size_t n, Frequency frequency) {
    std::vector<Period> idx;
    idx.reserve(n);
    Period p = frequency == Frequency::Monthly ? Period{2000, 1, 0} : Period{2000, 1, 3};
    for (std::size_t i = 0; i < n; ++i) {
        idx.push_back(p);
        p = next_period(p, frequency);
    }
    return idx;
}

Dataset make_dataset(const std::vector<std::pair<std::string, std::vector<double>>>& columns,
                     Frequency frequency) {
    if (columns.empty()) throw UsageError("dataset needs at least one column");
    const auto idx = make_index(columns.front().second.size(), frequency);
    Dataset d(frequency, idx);
    for (const auto& [name, values] : columns) d.add(TimeSeries(name, frequency, idx, values));
    return d;
}

std::vector<double> white_noise(Rng& rng, std::size_t n, double sd) {
    std::vector<double> e(n);
    for (double& v : e) v = sd * rng.normal();
    return e;
}

std::vector<double> ar1(Rng& rng, std::size_t n, double phi, double c, std::size_t burn) {
    std::vector<double> x(n);
    double prev = std::abs(phi) < 1.0 ? c / (1.0 - phi) : 0.0;
    for (std::size_t i = 0; i < burn + n; ++i) {
        prev = c + phi * prev + rng.normal();
        if (i >= burn) x[i - burn] = prev;
    }
    return x;
}

std::vector<double> random_walk(Rng& rng, std::size_t n, double start, double sd) {
    std::vector<double> x(n);
    double level = start;
    for (double& v : x) {
        level += sd * rng.normal();
        v = level;
    }
    return x;
}

Dataset unidirectional_var1(Rng& rng, std::size_t n, double a, double b, double c) {
    std::vector<double> x(n), y(n);
    double xp = 0.0, yp = 0.0;
    for (std::size_t i = 0; i < n + 50; ++i) {
        const double xn = a * xp + rng.normal();
        const double yn = b * yp + c * xp + rng.normal();
        xp = xn;
        yp = yn;
        if (i >= 50) {
            x[i - 50] = xn;
            y[i - 50] = yn;
        }
    }
    return make_dataset({{"X", x}, {"Y", y}});
}

Dataset cointegrated_pair(Rng& rng, std::size_t n, double lambda, double beta, double gamma) {
    std::vector<double> x(n), y(n);
    x[0] = rng.normal();
    y[0] = beta * x[0] + rng.normal();
    for (std::size_t t = 1; t < n; ++t) {
        x[t] = x[t - 1] + rng.normal();
        y[t] = y[t - 1] + lambda * (y[t - 1] - beta * x[t - 1]) + gamma * (x[t] - x[t - 1]) + rng.normal();
    }
    return make_dataset({{"Y", y}, {"X", x}});
}

Dataset ardl21(Rng& rng, std::size_t n) {
    std::vector<double> x(n), y(n);
    x[0] = rng.normal();
    x[1] = x[0] + rng.normal();
    y[0] = x[0];
    y[1] = x[1];
    for (std::size_t t = 2; t < n; ++t) {
        x[t] = x[t - 1] + rng.normal();
        const double dy1 = y[t - 1] - y[t - 2];
        y[t] = y[t - 1] + 0.4 * dy1 + 0.6 * (x[t] - x[t - 1]) - 0.3 * (y[t - 1] - x[t - 1]) + rng.normal();
    }
    return make_dataset({{"Y", y}, {"X", x}});
}

Dataset heteroskedastic(Rng& rng, std::size_t n) {
    std::vector<double> x(n), y(n);
    for (std::size_t t = 0; t < n; ++t) {
        x[t] = 3.0 * rng.uniform();
        y[t] = 1.0 + x[t] + x[t] * rng.normal();
    }
    return make_dataset({{"Y", y}, {"X", x}});
}

Dataset coefficient_break(Rng& rng, std::size_t n, double beta, double factor) {
    std::vector<double> x(n), y(n);
    for (std::size_t t = 0; t < n; ++t) {
        x[t] = 2.0 + rng.normal();
        const double b = t < n / 2 ? beta : factor * beta;
        y[t] = 1.0 + b * x[t] + rng.normal();
    }
    return make_dataset({{"Y", y}, {"X", x}});
}

Dataset ar_errors(Rng& rng, std::size_t n, double rho) {
    std::vector<double> x(n), y(n);
    const auto u = ar1(rng, n, rho);
    for (std::size_t t = 0; t < n; ++t) {
        x[t] = rng.normal();
        y[t] = 1.0 + x[t] + u[t];
    }
    return make_dataset({{"Y", y}, {"X", x}});
}

Dataset cointegrated_system(Rng& rng, std::size_t n, std::size_t k, Frequency frequency) {
    std::vector<std::vector<double>> x(k, std::vector<double>(n));
    std::vector<double> y(n), d(n);
    std::vector<double> beta(k);
    for (std::size_t j = 0; j < k; ++j) beta[j] = 1.0 / static_cast<double>(j + 1);
    for (std::size_t t = 0; t < n; ++t) d[t] = rng.uniform() < 0.1 ? 1.0 : 0.0;
    for (std::size_t j = 0; j < k; ++j) x[j][0] = rng.normal();
    double eq = 0.0;
    for (std::size_t j = 0; j < k; ++j) eq += beta[j] * x[j][0];
    y[0] = eq + rng.normal();
    for (std::size_t t = 1; t < n; ++t) {
        double target = 0.5 * d[t - 1];
        for (std::size_t j = 0; j < k; ++j) {
            x[j][t] = x[j][t - 1] + rng.normal();
            target += beta[j] * x[j][t - 1];
        }
        y[t] = y[t - 1] - 0.25 * (y[t - 1] - target) + 0.3 * (x[0][t] - x[0][t - 1]) + rng.normal();
    }
    std::vector<std::pair<std::string, std::vector<double>>> cols{{"Y", y}};
    for (std::size_t j = 0; j < k; ++j) cols.emplace_back("X" + std::to_string(j + 1), x[j]);
    cols.emplace_back("DPOL", d);
    return make_dataset(cols, frequency);
}

}  // namespace tsecon::sim
