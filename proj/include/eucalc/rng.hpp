#ifndef EUCALC_RNG_HPP
#define EUCALC_RNG_HPP

#include <cstdint>

namespace eucalc {

// Fixed 64-bit linear congruential generator (MMIX multiplier/increment).
// Replay documents and seeds are only meaningful if every build produces the
// same stream, so std::mt19937 and friends are deliberately avoided.
//
//   state <- state * 6364136223846793005 + 1442695040888963407
//
// Output takes the high 32 bits of the state, which pass for random far
// better than the low bits of an LCG.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {
        // burn a few values so nearby seeds decorrelate
        next_u32();
        next_u32();
    }

    std::uint32_t next_u32() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state_ >> 32);
    }

    // uniform in [0, n); n must be positive
    std::uint32_t below(std::uint32_t n) { return next_u32() % n; }

    // uniform in [lo, hi] inclusive
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint32_t>(hi - lo + 1))); }

    bool chance(std::uint32_t numer, std::uint32_t denom) { return below(denom) < numer; }

private:
    std::uint64_t state_;
};

// Stable mix of a base seed and a check index, so sharded harness workers
// draw independent, replayable streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace eucalc

#endif
