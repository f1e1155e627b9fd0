#pragma once

// Data-parallel inner loops used by the linear algebra and statistics code.
//
// Every kernel has a scalar reference implementation and an AVX2/FMA variant.
// The variant is chosen once at startup from CPUID; tests can force either
// backend to check that the two agree.

#include <cstddef>
#include <span>
#include <string_view>

namespace tsecon::kernels {

enum class Backend { Scalar, Avx2 };

/// Central moment sums around a fixed mean: Σd², Σd³, Σd⁴ with d = x − mean.
struct MomentSums {
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;
};

struct KernelTable {
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*weighted_dot)(const double* a, const double* b, const double* w, std::size_t n);
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    double (*squared_distance)(const double* a, const double* b, std::size_t n);
    MomentSums (*central_moments)(const double* a, std::size_t n, double mean);
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the build has no AVX2 variant.
const KernelTable* avx2_table() noexcept;

bool avx2_supported() noexcept;
Backend active_backend() noexcept;
/// Forces a backend. Selecting Avx2 on a machine without it falls back to Scalar
/// and returns false.
bool set_backend(Backend backend) noexcept;
std::string_view backend_name(Backend backend) noexcept;

const KernelTable& active() noexcept;

inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
    return active().dot(a.data(), b.data(), a.size());
}

inline double weighted_dot(std::span<const double> a, std::span<const double> b,
                           std::span<const double> w) noexcept {
    return active().weighted_dot(a.data(), b.data(), w.data(), a.size());
}

/// y += alpha * x
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
    active().axpy(alpha, x.data(), y.data(), x.size());
}

inline double sum(std::span<const double> a) noexcept { return active().sum(a.data(), a.size()); }

inline double sum_squares(std::span<const double> a) noexcept { return dot(a, a); }

/// Σ (a_i − b_i)²
inline double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
    return active().squared_distance(a.data(), b.data(), a.size());
}

inline MomentSums central_moments(std::span<const double> a, double mean) noexcept {
    return active().central_moments(a.data(), a.size(), mean);
}

}  // namespace tsecon::kernels
