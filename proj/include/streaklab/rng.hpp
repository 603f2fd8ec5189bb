#pragma once

#include <cstdint>
#include <random>

namespace streaklab {

// splitmix64; used only to derive well-separated seeds for the
// per-shot, per-purpose mt19937_64 streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// RNG stream roles within one shot. Disjoint ids keep phase noise,
// frequency draws and event sampling statistically independent while
// everything stays reproducible from one master seed.
enum class rng_stream : std::uint64_t {
    shot_frequencies = 1,
    phase_path_a = 2,
    phase_path_b = 3,
    initial_phase = 4,
    events = 5,
    dark_noise = 6,
    analysis_subset = 7,
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t shot_index,
                                 rng_stream stream) {
    std::uint64_t s = master;
    (void)splitmix64(s);
    s ^= 0x6a09e667f3bcc909ULL + shot_index * 0xd1342543de82ef95ULL;
    (void)splitmix64(s);
    s ^= static_cast<std::uint64_t>(stream) * 0xa0761d6478bd642fULL;
    return splitmix64(s);
}

inline std::mt19937_64 make_rng(std::uint64_t master, std::uint64_t shot_index,
                                rng_stream stream) {
    const std::uint64_t d = derive_seed(master, shot_index, stream);
    std::seed_seq seq{static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(d >> 32),
                      static_cast<std::uint32_t>(shot_index),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

}  // namespace streaklab
