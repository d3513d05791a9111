#include "apolar/modp_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace apolar::kernels {

__attribute__((target("avx2"))) void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                                   std::size_t n, std::uint32_t f, std::uint32_t p) {
    if (f == 0) return;
    const auto fq = static_cast<std::uint32_t>((static_cast<std::uint64_t>(f) << 32) / p);
    const __m256i vf = _mm256_set1_epi32(static_cast<int>(f));
    const __m256i vfq = _mm256_set1_epi32(static_cast<int>(fq));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));

    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
        // high halves of x * fq, even and odd lanes separately
        __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, vfq), 32);
        __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), vfq);
        __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
        __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, vf), _mm256_mullo_epi32(q, vp));
        r = _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
        __m256i s = _mm256_add_epi32(d, r);
        s = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), s);
    }
    if (j < n) axpy_mod_scalar(dst + j, src + j, n - j, f, p);
}

}  // namespace apolar::kernels
#endif
