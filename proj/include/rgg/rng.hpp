#pragma once

#include <cstdint>

namespace rgg {

// Counter-based generator: output i of stream `key` is mix(key, i).
// No hidden global state; streams with distinct keys are independent,
// and substreams can be derived by hashing (key, index) pairs.
struct RandomState {
    std::uint64_t key = 0;
    std::uint64_t counter = 0;

    explicit RandomState(std::uint64_t seed = 0) : key(seed) {}

    static std::uint64_t mix(std::uint64_t x) {
        // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static std::uint64_t hash2(std::uint64_t a, std::uint64_t b) {
        return mix(mix(a) ^ (b + 0x9e3779b97f4a7c15ULL));
    }

    static std::uint64_t hash3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
        return hash2(hash2(a, b), c);
    }

    std::uint64_t next_u64() { return mix(key ^ (0xd1b54a32d192ed03ULL * ++counter)); }

    // uniform in [0,1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        // rejection-free modulo is fine here; n is tiny compared to 2^64
        return next_u64() % n;
    }

    // child stream for a trial/worker index; independent of this stream's counter
    RandomState substream(std::uint64_t index) const { return RandomState(hash2(key, index)); }
};

// stateless uniform attached to an unordered pair, used for soft-edge coupling
inline double pair_uniform(std::uint64_t key, std::uint64_t i, std::uint64_t j) {
    if (i > j) { const auto t = i; i = j; j = t; }
    return static_cast<double>(RandomState::hash3(key, i, j) >> 11) * 0x1.0p-53;
}

}  // namespace rgg
