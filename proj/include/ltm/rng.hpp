#ifndef LTM_RNG_HPP
#define LTM_RNG_HPP

#include <cstdint>

namespace ltm {

// SplitMix64 used in counter mode: output k of stream s under seed q is
// mix(q ^ hash(s) + k * golden).  Streams derived by index are independent
// of how work is split across workers, so a run is reproducible from
// (seed, stream) alone.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed + 0x9E3779B97F4A7C15ULL * (stream + 1))), counter_(0) {}

    std::uint64_t next_u64() {
        return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

  private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace ltm

#endif
