#pragma once

#include <cstdint>
#include <random>

namespace structkit {

// Seeded generator with platform-independent integer draws
// (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [lo, hi]; the modulo bias is negligible for the small
    // ranges used here.
    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }
    bool chance(unsigned percent) { return engine_() % 100 < percent; }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// Independent per-task seed derived from a base seed (splitmix64 step).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace structkit
