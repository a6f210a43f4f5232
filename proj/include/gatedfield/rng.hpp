#pragma once

#include <cstdint>

namespace gatedfield {

// SplitMix64 finalizer: the standard 64-bit avalanche mix.
std::uint64_t splitmix64(std::uint64_t x);

struct NormalPair {
    double first;
    double second;
};

// Counter-based standard-normal generator: a stateless hash of
// (seed, counter) fed through Box-Muller. Any (seed, counter) pair yields
// the same value regardless of call order or thread schedule, which is what
// makes Monte Carlo runs replayable from the seed alone.
NormalPair normal_pair(std::uint64_t seed, std::uint64_t counter);

} // namespace gatedfield
