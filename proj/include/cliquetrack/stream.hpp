#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cliquetrack/reveal.hpp"

namespace cliquetrack {

// Windowed detection rule: a structure's track is live at tick t when it
// was revealed in at least k of the ticks t-m+1..t.
struct TrackConfig {
    int k = 2;
    int m = 3;
};

enum class TrackStatus { Absent, Candidate, Active };

const char* track_status_name(TrackStatus status);

struct Track {
    std::string id;
    RevealedStructure structure; // first-seen form
    std::vector<bool> hits;
    std::vector<TrackStatus> status;
    std::optional<int> initiated_at; // first Active tick
    std::vector<int> active_ticks;
};

struct TickRecord {
    int tick = 0;
    std::optional<ClusterId> cluster;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::vector<std::string> revealed; // canonical ids, revelation order
};

struct TrackLog {
    std::vector<TickRecord> ticks;
    std::map<std::string, Track> tracks;
};

// Fused graph of the cluster active at `tick`, using that tick's state
// column and overrides; an empty graph on idle ticks. Throws TickOutOfRange.
ColoredGraph tick_graph(const SystemModel& model, const Scenario& scenario,
                        int tick);

// True when hits in the window max(0, tick-m+1)..tick reach k. Positions
// before tick 0 count as misses.
bool k_of_m(const std::vector<bool>& hits, int tick, const TrackConfig& cfg);

// Replays the scenario: fuse the active cluster per tick, reveal structures
// (min_size resolves against that tick's cluster when left to default),
// and maintain one track per canonical id under the k-of-m rule. Structures
// first revealed mid-run carry implicit misses for earlier ticks.
TrackLog run(const SystemModel& model, const Scenario& scenario,
             const StructureSpec& spec, const TrackConfig& cfg);

void to_json(nlohmann::json& j, const TrackLog& log);

// One DOT file per tick, named tick_%03d.dot, in `dir` (created if needed).
void write_tick_dots(const SystemModel& model, const Scenario& scenario,
                     const std::filesystem::path& dir);

} // namespace cliquetrack
