#include "apolar/modp_kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace apolar::kernels {

void axpy_mod_neon(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t f,
                   std::uint32_t p) {
    if (f == 0) return;
    const auto fq = static_cast<std::uint32_t>((static_cast<std::uint64_t>(f) << 32) / p);
    const uint32x4_t vf = vdupq_n_u32(f);
    const uint32x2_t vfq = vdup_n_u32(fq);
    const uint32x4_t vp = vdupq_n_u32(p);

    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        uint32x4_t x = vld1q_u32(src + j);
        uint32x4_t d = vld1q_u32(dst + j);
        uint32x2_t qlo = vshrn_n_u64(vmull_u32(vget_low_u32(x), vfq), 32);
        uint32x2_t qhi = vshrn_n_u64(vmull_u32(vget_high_u32(x), vfq), 32);
        uint32x4_t q = vcombine_u32(qlo, qhi);
        uint32x4_t r = vmlsq_u32(vmulq_u32(x, vf), q, vp);
        r = vminq_u32(r, vsubq_u32(r, vp));
        uint32x4_t s = vaddq_u32(d, r);
        s = vminq_u32(s, vsubq_u32(s, vp));
        vst1q_u32(dst + j, s);
    }
    if (j < n) axpy_mod_scalar(dst + j, src + j, n - j, f, p);
}

}  // namespace apolar::kernels
#endif
