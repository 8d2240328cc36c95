#pragma once

#include <cstdint>
#include <random>

namespace mdim {

// Seed for every randomized operation. Identical seeds give bit-identical
// output across runs and thread counts.
struct RngSeed {
    std::uint64_t value = 0;
};

// splitmix64 mixer, used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed of the i-th derived stream (one per experiment trial / sampled pair),
// so parallel trials are order-independent.
constexpr std::uint64_t stream_seed(RngSeed master, std::uint64_t index) {
    return splitmix64(master.value ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

// mt19937_64 with hand-rolled distributions. The engine's output sequence is
// fixed by the standard; std:: distributions are not, so we implement the few
// we need to keep results portable across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    explicit Rng(RngSeed seed) : eng_(seed.value) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform integer in [0, bound), bound > 0. Unbiased via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = eng_();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53-bit resolution.
    double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

private:
    std::mt19937_64 eng_;
};

}  // namespace mdim
