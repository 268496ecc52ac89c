#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliquetrack/error.hpp"

namespace cliquetrack {

using ComponentId = std::string;
using FunctionId = std::string;
using ClusterId = std::string;

// Ordinal health scale. Level 1 is the worst state, `levels` the best.
struct OrdinalScale {
    int levels = 4;
    std::map<int, std::string> labels; // optional, level -> text

    bool contains(int level) const { return level >= 1 && level <= levels; }
};

struct FunctionDef {
    FunctionId id;
    std::vector<ComponentId> components;
};

struct ClusterDef {
    ClusterId id;
    std::vector<FunctionId> functions;
};

// The static system description: components, the component subset each
// function uses, and the function clusters that execute concurrently.
// Iteration order is declaration order throughout, which keeps every
// downstream output deterministic.
struct SystemModel {
    OrdinalScale scale;
    std::vector<ComponentId> components;
    std::vector<FunctionDef> functions;
    std::vector<ClusterDef> clusters;

    const FunctionDef* find_function(const FunctionId& id) const;
    const ClusterDef* find_cluster(const ClusterId& id) const;
    bool has_component(const ComponentId& id) const;
    // Position in declaration order, -1 if absent.
    int component_index(const ComponentId& id) const;
};

// Component states at one instant. `overrides` carries per-function test
// results where they differ from the component's global state.
struct StateAssignment {
    std::map<ComponentId, int> global;
    std::map<std::pair<ComponentId, FunctionId>, int> overrides;

    // State of `component` as seen by `function`: override if present,
    // otherwise the global level. Throws MissingState when neither exists.
    int level_for(const ComponentId& component, const FunctionId& function) const;

    // Minimum over the global level and every override for the component.
    int effective_level(const ComponentId& component) const;
};

struct TickOverride {
    int tick = 0;
    ComponentId component;
    FunctionId function;
    int level = 0;
};

// Discrete-time replay input: which cluster is active at each tick and the
// per-component state streams. A null chain entry means no cluster runs at
// that tick (the fused graph is empty there).
struct Scenario {
    int ticks = 1;
    std::vector<std::optional<ClusterId>> chain;
    std::map<ComponentId, std::vector<int>> states;
    std::vector<TickOverride> overrides;
};

// Checks every model/scenario invariant and reports each breach. Empty
// result means the inputs are consistent.
std::vector<Violation> validate(const SystemModel& model,
                                const std::optional<Scenario>& scenario);

// Union of the component sets of the cluster's functions, ordered by the
// model's component declaration order. Throws UnknownId.
std::vector<ComponentId> cluster_components(const SystemModel& model,
                                            const ClusterId& cluster);

// Snapshot of the scenario's states at one tick, including that tick's
// per-function overrides. Throws TickOutOfRange.
StateAssignment state_at(const Scenario& scenario, int tick);

} // namespace cliquetrack
