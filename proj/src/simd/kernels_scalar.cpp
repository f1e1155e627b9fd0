#include "tsecon/kernels.hpp"

namespace tsecon::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double weighted_dot_scalar(const double* a, const double* b, const double* w, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i] * w[i];
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double sum_scalar(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i];
    return s;
}

double squared_distance_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

MomentSums central_moments_scalar(const double* a, std::size_t n, double mean) {
    MomentSums m;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - mean;
        const double d2 = d * d;
        m.m2 += d2;
        m.m3 += d2 * d;
        m.m4 += d2 * d2;
    }
    return m;
}

}  // namespace

const KernelTable& scalar_table() noexcept {
    static const KernelTable table{dot_scalar,  weighted_dot_scalar,     axpy_scalar,
                                   sum_scalar,  squared_distance_scalar, central_moments_scalar};
    return table;
}

}  // namespace tsecon::kernels
