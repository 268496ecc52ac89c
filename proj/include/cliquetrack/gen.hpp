#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cliquetrack/model.hpp"

namespace cliquetrack {

// SplitMix64: the fixed, portable generator behind all synthetic streams.
// Same seed, same output, on every platform. Component streams draw from
// independent engines derived from (seed, component index), so per-component
// generation order never changes the result.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next();
    // Uniform in [0, 1), 53-bit resolution.
    double next_unit();

    // Engine for substream `index` of `seed`.
    static SplitMix64 split(std::uint64_t seed, std::uint64_t index);
};

// Synthetic state-stream model.
//   Constant: fixed per-component levels, repeated every tick.
//   Iid:      each tick drawn from `initial` independently.
//   Markov:   first tick from `initial`, then the row-stochastic
//             `transition` matrix (row = current level - 1).
struct StreamModel {
    enum class Kind { Constant, Iid, Markov };

    Kind kind = Kind::Constant;
    std::map<ComponentId, int> constant_levels;
    std::vector<double> initial;                  // index = level - 1
    std::vector<std::vector<double>> transition;  // L x L
    std::uint64_t seed = 0;
};

// One length-`ticks` level sequence per model component, fully determined
// by (model, ticks, stream_model). Throws BadDistribution / MissingState /
// LevelOutOfRange on invalid parameters.
std::map<ComponentId, std::vector<int>> generate_streams(const SystemModel& model,
                                                         int ticks,
                                                         const StreamModel& stream_model);

// Frequency of each scale level over all components and ticks. Throws
// EmptySet when there is nothing to count.
std::map<int, double> empirical_marginals(const std::map<ComponentId, std::vector<int>>& streams,
                                          const OrdinalScale& scale);

} // namespace cliquetrack
