#ifndef HK_RNG_HPP
#define HK_RNG_HPP

#include <cstdint>

namespace hk {

// Deterministic splitmix64 generator. std::uniform_int_distribution is
// implementation-defined, so reports seeded through this class are
// byte-identical across compilers and platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Derive an independent stream for (seed, trial index).
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        return Rng(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here, the
    // draws only need to be deterministic and well spread.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Nonzero integer in [-m, m].
    long nonzero(long m) {
        long v = uniform(1, m);
        return (next() & 1) ? v : -v;
    }

  private:
    std::uint64_t state_;
};

} // namespace hk

#endif
