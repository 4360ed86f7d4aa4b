#ifndef LEGAL_RNG_HPP
#define LEGAL_RNG_HPP

#include <cstdint>

namespace legal {

// splitmix64 step; also used to hash (seed, index) pairs into independent
// counter-based substreams so results do not depend on evaluation order.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(splitmix64(seed)) {}
    Rng(uint64_t seed, uint64_t stream) : state(splitmix64(splitmix64(seed) ^ stream)) {}
    uint64_t next() { return state = splitmix64(state); }
    // uniform in [0, bound) by rejection
    uint64_t below(uint64_t bound) {
        uint64_t lim = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do x = next();
        while (x >= lim);
        return x % bound;
    }
    double uniform() { return (double)(next() >> 11) * 0x1.0p-53; }
};

} // namespace legal

#endif
