#include <atomic>

#include "tsecon/kernels.hpp"

namespace tsecon::kernels {

#if defined(TSECON_HAVE_AVX2)
const KernelTable& avx2_table_impl() noexcept;
#endif

namespace {

const KernelTable* detect() noexcept {
#if defined(TSECON_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &avx2_table_impl();
#endif
    return &scalar_table();
}

std::atomic<const KernelTable*>& current() noexcept {
    static std::atomic<const KernelTable*> table{detect()};
    return table;
}

}  // namespace

const KernelTable* avx2_table() noexcept {
#if defined(TSECON_HAVE_AVX2)
    return avx2_supported() ? &avx2_table_impl() : nullptr;
#else
    return nullptr;
#endif
}

bool avx2_supported() noexcept {
#if defined(TSECON_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_relaxed); }

Backend active_backend() noexcept {
    return &active() == &scalar_table() ? Backend::Scalar : Backend::Avx2;
}

bool set_backend(Backend backend) noexcept {
    if (backend == Backend::Avx2) {
        if (const KernelTable* t = avx2_table()) {
            current().store(t, std::memory_order_relaxed);
            return true;
        }
        current().store(&scalar_table(), std::memory_order_relaxed);
        return false;
    }
    current().store(&scalar_table(), std::memory_order_relaxed);
    return true;
}

std::string_view backend_name(Backend backend) noexcept {
    return backend == Backend::Avx2 ? "avx2" : "scalar";
}

}  // namespace tsecon::kernels
