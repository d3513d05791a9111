#include "apolar/modp_kernels.hpp"

namespace apolar::kernels {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t f,
                     std::uint32_t p) {
    if (f == 0) return;
    const auto fq = static_cast<std::uint32_t>((static_cast<std::uint64_t>(f) << 32) / p);
    for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t x = src[j];
        auto q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * fq) >> 32);
        std::uint32_t r = x * f - q * p;  // in [0, 2p), exact modulo 2^32
        if (r >= p) r -= p;
        std::uint32_t s = dst[j] + r;
        if (s >= p) s -= p;
        dst[j] = s;
    }
}

}  // namespace apolar::kernels
