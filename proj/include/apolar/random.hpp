#ifndef APOLAR_RANDOM_HPP
#define APOLAR_RANDOM_HPP

#include <cstdint>
#include <random>

namespace apolar {

// Explicit seeded random source. Passed by reference to anything that needs
// randomness so that runs are reproducible from the recorded seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next() { return eng_(); }
    // Uniform integer in [lo, hi].
    long long uniform(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng_);
    }
    // Random prime in (2^30, 2^31).
    std::uint32_t prime31();

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

bool is_prime_u32(std::uint32_t n);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);

std::uint64_t entropy_seed();

}  // namespace apolar

#endif
