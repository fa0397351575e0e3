#pragma once

#include <cstdint>
#include <random>

namespace ginvar {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic RNG.  mt19937_64 output is pinned by the standard; the
/// bounded draws below avoid std::uniform_int_distribution, whose mapping is
/// implementation-defined, so identical seeds give identical streams on every
/// platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Uniform draw from {0, ..., n-1} via rejection.
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do { x = eng_(); } while (x >= limit);
        return x % n;
    }

    /// Uniform draw from {lo, ..., hi}.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace ginvar
