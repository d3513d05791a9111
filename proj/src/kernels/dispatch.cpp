#include "apolar/modp_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace apolar::kernels {

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(__x86_64__) || defined(__i386__)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Backend::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

AxpyFn backend_fn(Backend b) {
    switch (b) {
#if defined(__x86_64__) || defined(__i386__)
        case Backend::avx2:
            return axpy_mod_avx2;
#endif
#if defined(__aarch64__)
        case Backend::neon:
            return axpy_mod_neon;
#endif
        default:
            return axpy_mod_scalar;
    }
}

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "scalar";
}

namespace {

Backend detect() {
    if (const char* env = std::getenv("APOLAR_SIMD")) {
        for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
            if (std::strcmp(env, backend_name(b).c_str()) == 0 && backend_available(b)) return b;
    }
    if (backend_available(Backend::avx2)) return Backend::avx2;
    if (backend_available(Backend::neon)) return Backend::neon;
    return Backend::scalar;
}

std::atomic<int>& current() {
    static std::atomic<int> b{static_cast<int>(detect())};
    return b;
}

}  // namespace

Backend active_backend() { return static_cast<Backend>(current().load(std::memory_order_relaxed)); }

void set_backend(Backend b) {
    if (!backend_available(b)) b = Backend::scalar;
    current().store(static_cast<int>(b), std::memory_order_relaxed);
}

}  // namespace apolar::kernels
