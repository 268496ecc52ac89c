#include "cliquetrack/stream.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "cliquetrack/fusion.hpp"

namespace cliquetrack {

const char* track_status_name(TrackStatus status) {
    switch (status) {
    case TrackStatus::Absent: return "Absent";
    case TrackStatus::Candidate: return "Candidate";
    case TrackStatus::Active: return "Active";
    }
    return "?";
}

ColoredGraph tick_graph(const SystemModel& model, const Scenario& scenario, int tick) {
    if (tick < 0 || tick >= scenario.ticks)
        throw Error(ErrorCode::TickOutOfRange,
                    "tick " + std::to_string(tick) + " outside 0.." +
                        std::to_string(scenario.ticks - 1));
    const auto& entry = scenario.chain.at(tick);
    if (!entry) return {};
    return integrated_graph(model, *entry, state_at(scenario, tick));
}

namespace {

void check_track_config(const TrackConfig& cfg) {
    if (cfg.k < 1 || cfg.m < cfg.k)
        throw Error(ErrorCode::BadSpec,
                    "track rule needs 1 <= k <= m, got k=" + std::to_string(cfg.k) +
                        " m=" + std::to_string(cfg.m));
}

int window_hits(const std::vector<bool>& hits, int tick, int m) {
    int count = 0;
    for (int t = std::max(0, tick - m + 1); t <= tick; ++t)
        if (hits[t]) ++count;
    return count;
}

} // namespace

bool k_of_m(const std::vector<bool>& hits, int tick, const TrackConfig& cfg) {
    check_track_config(cfg);
    if (tick < 0 || tick >= static_cast<int>(hits.size()))
        throw Error(ErrorCode::TickOutOfRange,
                    "tick " + std::to_string(tick) + " outside the hit sequence");
    return window_hits(hits, tick, cfg.m) >= cfg.k;
}

TrackLog run(const SystemModel& model, const Scenario& scenario,
             const StructureSpec& spec, const TrackConfig& cfg) {
    check_track_config(cfg);
    const int ticks = scenario.ticks;

    TrackLog log;
    std::map<std::string, RevealedStructure> first_seen;
    std::map<std::string, std::vector<bool>> hit_map;

    for (int tick = 0; tick < ticks; ++tick) {
        ColoredGraph graph = tick_graph(model, scenario, tick);
        TickRecord record;
        record.tick = tick;
        record.cluster = scenario.chain.at(tick);
        record.vertex_count = graph.vertex_count();
        record.edge_count = graph.edge_count();

        if (record.cluster) {
            const ClusterDef* cluster = model.find_cluster(*record.cluster);
            StructureSpec resolved = resolve_spec(
                spec, cluster ? static_cast<int>(cluster->functions.size()) : 0,
                model.scale);
            for (const auto& s : find_structures(graph, resolved)) {
                const std::string id = s.canonical_id();
                record.revealed.push_back(id);
                first_seen.try_emplace(id, s);
                auto& hits = hit_map[id];
                hits.resize(ticks, false);
                hits[tick] = true;
            }
        }
        log.ticks.push_back(std::move(record));
    }

    for (auto& [id, hits] : hit_map) {
        hits.resize(ticks, false);
        Track track;
        track.id = id;
        track.structure = first_seen.at(id);
        track.hits = hits;
        for (int tick = 0; tick < ticks; ++tick) {
            const int count = window_hits(hits, tick, cfg.m);
            TrackStatus status = TrackStatus::Absent;
            if (count >= cfg.k)
                status = TrackStatus::Active;
            else if (count > 0)
                status = TrackStatus::Candidate;
            track.status.push_back(status);
            if (status == TrackStatus::Active) {
                if (!track.initiated_at) track.initiated_at = tick;
                track.active_ticks.push_back(tick);
            }
        }
        log.tracks.emplace(id, std::move(track));
    }
    return log;
}

void to_json(nlohmann::json& j, const TrackLog& log) {
    j = nlohmann::json{{"ticks", nlohmann::json::array()},
                       {"tracks", nlohmann::json::object()}};
    for (const auto& record : log.ticks) {
        nlohmann::json entry{{"tick", record.tick}, {"revealed", record.revealed}};
        entry["cluster"] = record.cluster ? nlohmann::json(*record.cluster)
                                          : nlohmann::json(nullptr);
        j["ticks"].push_back(std::move(entry));
    }
    for (const auto& [id, track] : log.tracks) {
        nlohmann::json entry{{"hits", nlohmann::json::array()},
                             {"status", nlohmann::json::array()}};
        for (bool hit : track.hits) entry["hits"].push_back(hit ? 1 : 0);
        for (TrackStatus status : track.status)
            entry["status"].push_back(track_status_name(status));
        entry["initiated_at"] = track.initiated_at ? nlohmann::json(*track.initiated_at)
                                                   : nlohmann::json(nullptr);
        j["tracks"][id] = std::move(entry);
    }
}

void write_tick_dots(const SystemModel& model, const Scenario& scenario,
                     const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (int tick = 0; tick < scenario.ticks; ++tick) {
        char name[32];
        std::snprintf(name, sizeof name, "tick_%03d.dot", tick);
        ColoredGraph graph = tick_graph(model, scenario, tick);
        const auto& entry = scenario.chain.at(tick);
        std::ofstream out(dir / name, std::ios::binary);
        if (!out)
            throw Error(ErrorCode::IoError,
                        "cannot write " + (dir / name).string());
        out << to_dot(graph, model.scale, entry ? *entry : "idle");
    }
}

} // namespace cliquetrack
