#include "cliquetrack/model.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace cliquetrack {

const FunctionDef* SystemModel::find_function(const FunctionId& id) const {
    for (const auto& f : functions)
        if (f.id == id) return &f;
    return nullptr;
}

const ClusterDef* SystemModel::find_cluster(const ClusterId& id) const {
    for (const auto& c : clusters)
        if (c.id == id) return &c;
    return nullptr;
}

bool SystemModel::has_component(const ComponentId& id) const {
    return component_index(id) >= 0;
}

int SystemModel::component_index(const ComponentId& id) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i] == id) return static_cast<int>(i);
    return -1;
}

int StateAssignment::level_for(const ComponentId& component,
                               const FunctionId& function) const {
    auto ov = overrides.find({component, function});
    if (ov != overrides.end()) return ov->second;
    auto gl = global.find(component);
    if (gl != global.end()) return gl->second;
    throw Error(ErrorCode::MissingState,
                "no state for component " + component + " (function " + function + ")");
}

int StateAssignment::effective_level(const ComponentId& component) const {
    bool seen = false;
    int level = 0;
    auto gl = global.find(component);
    if (gl != global.end()) {
        level = gl->second;
        seen = true;
    }
    for (const auto& [key, value] : overrides) {
        if (key.first != component) continue;
        if (!seen || value < level) level = value;
        seen = true;
    }
    if (!seen)
        throw Error(ErrorCode::MissingState, "no state for component " + component);
    return level;
}

namespace {

void check_id_list(std::vector<Violation>& out, const std::string& owner_kind,
                   const std::string& owner_id, const std::vector<std::string>& ids,
                   const std::string& member_kind,
                   const std::function<bool(const std::string&)>& exists) {
    if (ids.empty()) {
        out.push_back({ErrorCode::EmptySet, owner_id,
                       owner_kind + " " + owner_id + " has no " + member_kind + "s"});
        return;
    }
    std::set<std::string> seen;
    for (const auto& id : ids) {
        if (!seen.insert(id).second)
            out.push_back({ErrorCode::DuplicateId, owner_id,
                           owner_kind + " " + owner_id + " lists " + member_kind + " " +
                               id + " more than once"});
        if (!exists(id))
            out.push_back({ErrorCode::UnknownId, owner_id,
                           owner_kind + " " + owner_id + " references unknown " +
                               member_kind + " " + id});
    }
}

} // namespace

std::vector<Violation> validate(const SystemModel& model,
                                const std::optional<Scenario>& scenario) {
    std::vector<Violation> out;

    if (model.scale.levels < 2)
        out.push_back({ErrorCode::LevelOutOfRange, "scale",
                       "scale needs at least 2 levels, got " +
                           std::to_string(model.scale.levels)});
    for (const auto& [level, label] : model.scale.labels) {
        if (!model.scale.contains(level))
            out.push_back({ErrorCode::LevelOutOfRange, "scale",
                           "label for level " + std::to_string(level) +
                               " outside scale 1.." + std::to_string(model.scale.levels)});
    }

    std::set<ComponentId> component_set;
    for (const auto& c : model.components)
        if (!component_set.insert(c).second)
            out.push_back({ErrorCode::DuplicateId, c, "duplicate component id " + c});
    for (const auto& c : model.components)
        if (c.empty())
            out.push_back({ErrorCode::EmptySet, "components", "empty component id"});

    std::set<FunctionId> function_set;
    for (const auto& f : model.functions) {
        if (!function_set.insert(f.id).second)
            out.push_back({ErrorCode::DuplicateId, f.id, "duplicate function id " + f.id});
        check_id_list(out, "function", f.id, f.components, "component",
                      [&](const std::string& id) { return component_set.count(id) > 0; });
    }

    std::set<ClusterId> cluster_set;
    for (const auto& c : model.clusters) {
        if (!cluster_set.insert(c.id).second)
            out.push_back({ErrorCode::DuplicateId, c.id, "duplicate cluster id " + c.id});
        check_id_list(out, "cluster", c.id, c.functions, "function",
                      [&](const std::string& id) { return function_set.count(id) > 0; });
    }

    if (!scenario) return out;
    const Scenario& sc = *scenario;

    if (sc.ticks < 1)
        out.push_back({ErrorCode::TickOutOfRange, "scenario",
                       "scenario needs at least 1 tick, got " + std::to_string(sc.ticks)});
    if (static_cast<int>(sc.chain.size()) != sc.ticks)
        out.push_back({ErrorCode::LengthMismatch, "scenario",
                       "chain has " + std::to_string(sc.chain.size()) + " entries, expected " +
                           std::to_string(sc.ticks)});
    for (const auto& entry : sc.chain) {
        if (entry && !cluster_set.count(*entry))
            out.push_back({ErrorCode::UnknownId, *entry,
                           "chain references unknown cluster " + *entry});
    }

    for (const auto& [component, stream] : sc.states) {
        if (!component_set.count(component))
            out.push_back({ErrorCode::UnknownId, component,
                           "states reference unknown component " + component});
        if (static_cast<int>(stream.size()) != sc.ticks)
            out.push_back({ErrorCode::LengthMismatch, component,
                           "state stream for " + component + " has length " +
                               std::to_string(stream.size()) + ", expected " +
                               std::to_string(sc.ticks)});
        for (int level : stream) {
            if (!model.scale.contains(level)) {
                out.push_back({ErrorCode::LevelOutOfRange, component,
                               "state level " + std::to_string(level) + " for " + component +
                                   " outside scale 1.." + std::to_string(model.scale.levels)});
                break;
            }
        }
    }

    for (const auto& ov : sc.overrides) {
        std::ostringstream where;
        where << "override(tick=" << ov.tick << ", " << ov.component << ", " << ov.function
              << ")";
        if (ov.tick < 0 || ov.tick >= sc.ticks)
            out.push_back({ErrorCode::TickOutOfRange, ov.component,
                           where.str() + ": tick outside 0.." + std::to_string(sc.ticks - 1)});
        if (!component_set.count(ov.component))
            out.push_back({ErrorCode::UnknownId, ov.component,
                           where.str() + ": unknown component"});
        const FunctionDef* f = model.find_function(ov.function);
        if (!f) {
            out.push_back({ErrorCode::UnknownId, ov.function, where.str() + ": unknown function"});
        } else if (std::find(f->components.begin(), f->components.end(), ov.component) ==
                   f->components.end()) {
            out.push_back({ErrorCode::UnknownId, ov.component,
                           where.str() + ": component not used by function " + ov.function});
        }
        if (!model.scale.contains(ov.level))
            out.push_back({ErrorCode::LevelOutOfRange, ov.component,
                           where.str() + ": level " + std::to_string(ov.level) +
                               " outside scale 1.." + std::to_string(model.scale.levels)});
    }

    return out;
}

std::vector<ComponentId> cluster_components(const SystemModel& model,
                                            const ClusterId& cluster) {
    const ClusterDef* def = model.find_cluster(cluster);
    if (!def) throw Error(ErrorCode::UnknownId, "unknown cluster id " + cluster);

    std::set<ComponentId> members;
    for (const auto& fid : def->functions) {
        const FunctionDef* f = model.find_function(fid);
        if (!f)
            throw Error(ErrorCode::UnknownId,
                        "cluster " + cluster + " references unknown function " + fid);
        members.insert(f->components.begin(), f->components.end());
    }

    std::vector<ComponentId> out;
    for (const auto& c : model.components)
        if (members.count(c)) out.push_back(c);
    return out;
}

StateAssignment state_at(const Scenario& scenario, int tick) {
    if (tick < 0 || tick >= scenario.ticks)
        throw Error(ErrorCode::TickOutOfRange,
                    "tick " + std::to_string(tick) + " outside 0.." +
                        std::to_string(scenario.ticks - 1));

    StateAssignment out;
    for (const auto& [component, stream] : scenario.states) {
        if (tick < static_cast<int>(stream.size()))
            out.global[component] = stream[tick];
    }
    for (const auto& ov : scenario.overrides) {
        if (ov.tick == tick) out.overrides[{ov.component, ov.function}] = ov.level;
    }
    return out;
}

} // namespace cliquetrack
