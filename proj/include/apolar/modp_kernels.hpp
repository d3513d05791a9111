#ifndef APOLAR_MODP_KERNELS_HPP
#define APOLAR_MODP_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Row update used by modular elimination: dst[j] = (dst[j] + f * src[j]) mod p
// for p < 2^31 and all inputs already reduced. Multiplication by the fixed
// factor uses Shoup's precomputed quotient, which vectorizes with 32x32->64
// lane multiplies.
namespace apolar::kernels {

enum class Backend { scalar, avx2, neon };

using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                        std::uint32_t f, std::uint32_t p);

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t f,
                     std::uint32_t p);
#if defined(__x86_64__) || defined(__i386__)
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t f,
                   std::uint32_t p);
#endif
#if defined(__aarch64__)
void axpy_mod_neon(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t f,
                   std::uint32_t p);
#endif

bool backend_available(Backend b);
AxpyFn backend_fn(Backend b);
std::string backend_name(Backend b);

// Best available backend unless overridden with set_backend or the
// APOLAR_SIMD environment variable ("scalar", "avx2", "neon").
Backend active_backend();
void set_backend(Backend b);

inline void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t f,
                     std::uint32_t p) {
    backend_fn(active_backend())(dst, src, n, f, p);
}

}  // namespace apolar::kernels

#endif
