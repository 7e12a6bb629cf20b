#pragma once

#include <cstdint>

namespace ftc::sim {

/// SplitMix64: small counter-based generator, identical across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline std::uint64_t mix64(std::uint64_t x) {
    SplitMix64 s(x);
    return s.next();
}

/// Per-trial seed: hash of master seed, lattice size, error probability
/// and trial index; independent of scheduling.
inline std::uint64_t trial_seed(std::uint64_t master, int L, double p, int type_tag,
                                long trial_index) {
    std::uint64_t h = mix64(master ^ 0x5151AC5151AC5151ull);
    h = mix64(h ^ static_cast<std::uint64_t>(L));
    std::uint64_t pb;
    static_assert(sizeof(double) == 8);
    __builtin_memcpy(&pb, &p, 8);
    h = mix64(h ^ pb);
    h = mix64(h ^ static_cast<std::uint64_t>(type_tag));
    h = mix64(h ^ static_cast<std::uint64_t>(trial_index));
    return h;
}

}  // namespace ftc::sim
