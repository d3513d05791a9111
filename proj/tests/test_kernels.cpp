#include "apolar/modp_kernels.hpp"
#include "apolar/random.hpp"

#include <doctest.h>

#include <vector>

using namespace apolar;
using namespace apolar::kernels;

namespace {

std::vector<std::uint32_t> random_row(Rng& rng, std::size_t n, std::uint32_t p) {
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng.uniform(0, p - 1));
    return v;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar kernel matches 64-bit arithmetic") {
    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        std::uint32_t p = rng.prime31();
        std::size_t n = static_cast<std::size_t>(rng.uniform(0, 40));
        auto dst = random_row(rng, n, p), src = random_row(rng, n, p);
        std::uint32_t f = static_cast<std::uint32_t>(rng.uniform(0, p - 1));
        auto expect = dst;
        for (std::size_t i = 0; i < n; ++i) expect[i] = static_cast<std::uint32_t>((expect[i] + static_cast<std::uint64_t>(f) * src[i]) % p);
        axpy_mod_scalar(dst.data(), src.data(), n, f, p);
        CHECK(dst == expect);
    }
}

TEST_CASE("every available SIMD backend equals the scalar kernel") {
    Rng rng(10);
    for (Backend b : {Backend::avx2, Backend::neon}) {
        if (!backend_available(b)) {
            MESSAGE("backend " << backend_name(b) << " not available on this machine");
            continue;
        }
        AxpyFn fn = backend_fn(b);
        for (int t = 0; t < 400; ++t) {
            // small primes too, and the edge factors 0, 1, p-1
            std::uint32_t p = t % 4 == 0 ? 3u : t % 4 == 1 ? 65521u : rng.prime31();
            std::size_t n = static_cast<std::size_t>(rng.uniform(0, 70));
            auto dst = random_row(rng, n, p), src = random_row(rng, n, p);
            std::uint32_t f = t % 7 == 0 ? 0 : t % 7 == 1 ? 1 : t % 7 == 2 ? p - 1 : static_cast<std::uint32_t>(rng.uniform(0, p - 1));
            if (t % 11 == 0)
                for (auto& x : src) x = p - 1;
            auto a = dst, b2 = dst;
            axpy_mod_scalar(a.data(), src.data(), n, f, p);
            fn(b2.data(), src.data(), n, f, p);
            CHECK(a == b2);
        }
    }
}

TEST_CASE("backend selection") {
    Backend before = active_backend();
    CHECK(backend_available(Backend::scalar));
    CHECK(backend_available(before));
    set_backend(Backend::scalar);
    CHECK(active_backend() == Backend::scalar);
    std::vector<std::uint32_t> d{1, 2, 3}, s{4, 5, 6};
    axpy_mod(d.data(), s.data(), 3, 2, 7);
    CHECK(d == std::vector<std::uint32_t>{2, 5, 1});
    set_backend(before);
    CHECK(backend_name(Backend::avx2) == "avx2");
}

}  // TEST_SUITE
