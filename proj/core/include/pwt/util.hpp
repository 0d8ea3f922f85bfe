#pragma once

#include <cstdint>
#include <string_view>

namespace pwt {

// Deterministic cross-platform generator (splitmix64). Used for every seeded
// sampling step so results are reproducible regardless of platform or
// thread scheduling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough value in [0, n); n must be > 0. The slight modulo bias
    // is irrelevant for trial sampling.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Full-avalanche combiner (splitmix64 finalizer); these hashes key exactness-
// critical caches, so weak mixing of small integers is not acceptable.
inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
    std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 3));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from a base seed and a stable key.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t key) {
    SplitMix64 g(hash_mix(base ^ 0xa0761d6478bd642fULL, key));
    return g.next();
}

}  // namespace pwt
