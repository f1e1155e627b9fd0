#include "tsecon/core_stats.hpp"

#include <algorithm>
#include <cmath>

#include "tsecon/distributions.hpp"
#include "tsecon/error.hpp"
#include "tsecon/kernels.hpp"

namespace tsecon {

double jarque_bera(double skewness, double kurtosis, std::size_t n) {
    const double excess = kurtosis - 3.0;
    return static_cast<double>(n) / 6.0 * (skewness * skewness + excess * excess / 4.0);
}

double median(std::span<const double> values) {
    if (values.empty()) throw TooShort("median of an empty sample");
    std::vector<double> v(values.begin(), values.end());
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (v.size() % 2 == 1) return upper;
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

DescriptiveSummary describe(std::span<const double> values, std::string name) {
    const std::size_t n = values.size();
    if (n < 4) {
        throw TooShort("describe needs at least 4 observations, got " + std::to_string(n));
    }
    DescriptiveSummary out;
    out.name = std::move(name);
    out.n = n;
    const double nn = static_cast<double>(n);
    out.mean = kernels::sum(values) / nn;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    out.minimum = *lo;
    out.maximum = *hi;
    out.median = median(values);

    const kernels::MomentSums sums = kernels::central_moments(values, out.mean);
    if (!(sums.m2 > 0.0)) {
        throw DegenerateSeries("series '" + out.name + "' has zero variance");
    }
    out.std_dev = std::sqrt(sums.m2 / (nn - 1.0));
    const double m2 = sums.m2 / nn;
    out.skewness = (sums.m3 / nn) / std::pow(m2, 1.5);
    out.kurtosis = (sums.m4 / nn) / (m2 * m2);
    out.jarque_bera = jarque_bera(out.skewness, out.kurtosis, n);
    out.jb_pvalue = chi2_sf(out.jarque_bera, 2.0);
    return out;
}

DescriptiveSummary describe(const TimeSeries& s) { return describe(s.values(), s.name()); }

double pearson(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw TooShort("correlation needs two equal-length samples of size >= 2");
    const double mx = kernels::sum(x) / static_cast<double>(n);
    const double my = kernels::sum(y) / static_cast<double>(n);
    std::vector<double> dx(n), dy(n);
    for (std::size_t i = 0; i < n; ++i) {
        dx[i] = x[i] - mx;
        dy[i] = y[i] - my;
    }
    const double sxx = kernels::sum_squares(dx);
    const double syy = kernels::sum_squares(dy);
    if (!(sxx > 0.0) || !(syy > 0.0)) throw DegenerateSeries("correlation with a zero-variance series");
    return std::clamp(kernels::dot(dx, dy) / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationMatrix correlation_matrix(const Dataset& d) {
    const std::size_t m = d.series_count();
    CorrelationMatrix out{d.names(), Matrix(m, m)};
    if (d.observations() < 2) throw TooShort("correlation needs at least 2 observations");
    for (const auto& s : d.series()) {
        const double mean = kernels::sum(s.values()) / static_cast<double>(s.size());
        if (!(kernels::central_moments(s.values(), mean).m2 > 0.0)) {
            throw DegenerateSeries("correlation undefined: '" + s.name() + "' has zero variance");
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        out.entries(i, i) = 1.0;
        for (std::size_t j = 0; j < i; ++j) {
            const double r = pearson(d.series()[i].values(), d.series()[j].values());
            out.entries(i, j) = r;
            out.entries(j, i) = r;
        }
    }
    return out;
}

}  // namespace tsecon
