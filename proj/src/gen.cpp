#include "cliquetrack/gen.hpp"

#include <cmath>

namespace cliquetrack {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

} // namespace

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

SplitMix64 SplitMix64::split(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed + (index + 1) * kGolden);
    return SplitMix64(mixer.next());
}

namespace {

void check_distribution(const std::vector<double>& dist, int levels,
                        const std::string& what) {
    if (static_cast<int>(dist.size()) != levels)
        throw Error(ErrorCode::BadDistribution,
                    what + " needs " + std::to_string(levels) + " entries, got " +
                        std::to_string(dist.size()));
    double sum = 0.0;
    for (double p : dist) {
        if (p < 0.0 || !std::isfinite(p))
            throw Error(ErrorCode::BadDistribution, what + " has a negative or non-finite entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw Error(ErrorCode::BadDistribution,
                    what + " sums to " + std::to_string(sum) + ", expected 1");
}

int draw_level(const std::vector<double>& dist, double u) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist[i];
        if (u < acc) return static_cast<int>(i) + 1;
    }
    return static_cast<int>(dist.size()); // guards rounding at u ~ 1
}

} // namespace

std::map<ComponentId, std::vector<int>> generate_streams(const SystemModel& model,
                                                         int ticks,
                                                         const StreamModel& stream_model) {
    if (ticks < 1)
        throw Error(ErrorCode::BadSpec, "ticks must be at least 1");
    const int levels = model.scale.levels;

    switch (stream_model.kind) {
    case StreamModel::Kind::Constant:
        for (const auto& c : model.components) {
            auto it = stream_model.constant_levels.find(c);
            if (it == stream_model.constant_levels.end())
                throw Error(ErrorCode::MissingState, "no constant level for component " + c);
            if (!model.scale.contains(it->second))
                throw Error(ErrorCode::LevelOutOfRange,
                            "constant level " + std::to_string(it->second) + " for " + c +
                                " outside scale 1.." + std::to_string(levels));
        }
        break;
    case StreamModel::Kind::Iid:
        check_distribution(stream_model.initial, levels, "initial distribution");
        break;
    case StreamModel::Kind::Markov:
        check_distribution(stream_model.initial, levels, "initial distribution");
        if (static_cast<int>(stream_model.transition.size()) != levels)
            throw Error(ErrorCode::BadDistribution,
                        "transition matrix needs " + std::to_string(levels) + " rows");
        for (int r = 0; r < levels; ++r)
            check_distribution(stream_model.transition[r], levels,
                               "transition row " + std::to_string(r + 1));
        break;
    }

    std::map<ComponentId, std::vector<int>> out;
    for (std::size_t index = 0; index < model.components.size(); ++index) {
        const ComponentId& component = model.components[index];
        std::vector<int>& stream = out[component];
        stream.reserve(ticks);

        if (stream_model.kind == StreamModel::Kind::Constant) {
            stream.assign(ticks, stream_model.constant_levels.at(component));
            continue;
        }

        SplitMix64 rng = SplitMix64::split(stream_model.seed, index);
        int level = draw_level(stream_model.initial, rng.next_unit());
        stream.push_back(level);
        for (int t = 1; t < ticks; ++t) {
            if (stream_model.kind == StreamModel::Kind::Iid)
                level = draw_level(stream_model.initial, rng.next_unit());
            else
                level = draw_level(stream_model.transition[level - 1], rng.next_unit());
            stream.push_back(level);
        }
    }
    return out;
}

std::map<int, double> empirical_marginals(const std::map<ComponentId, std::vector<int>>& streams,
                                          const OrdinalScale& scale) {
    std::size_t total = 0;
    std::map<int, std::size_t> counts;
    for (int level = 1; level <= scale.levels; ++level) counts[level] = 0;
    for (const auto& [component, stream] : streams) {
        for (int level : stream) {
            ++counts[level];
            ++total;
        }
    }
    if (total == 0)
        throw Error(ErrorCode::EmptySet, "no stream values to summarize");

    std::map<int, double> out;
    for (const auto& [level, count] : counts)
        out[level] = static_cast<double>(count) / static_cast<double>(total);
    return out;
}

} // namespace cliquetrack
