#pragma once

#include <functional>
#include <vector>

#include "json.hpp"

#include "cliquetrack/reveal.hpp"
#include "cliquetrack/stream.hpp"

namespace cliquetrack {

struct ImprovementAction {
    ComponentId component;
    int from_level = 0;
    int to_level = 0;
};

bool operator==(const ImprovementAction& a, const ImprovementAction& b);
bool operator<(const ImprovementAction& a, const ImprovementAction& b);

// Action pricing. Must be strictly positive for every legal action.
using CostFn = std::function<int(const ImprovementAction&)>;

// Default: one unit per level step (to_level - from_level).
CostFn level_step_cost();
// One unit per action regardless of distance.
CostFn uniform_action_cost();

struct ImprovementPlan {
    // Chosen optimum: at most one action per component. Tie-break among
    // optima: fewest actions, then lexicographic action list.
    std::vector<ImprovementAction> actions;
    int total_cost = 0;
    // Every equally-optimal action set, the chosen one included.
    std::vector<std::vector<ImprovementAction>> alternatives;
};

// The structures to destroy: revelation over the given graph.
std::vector<RevealedStructure> destruction_targets(const ColoredGraph& graph,
                                                   const StructureSpec& spec);

// Same at one scenario tick (empty on idle ticks). Throws TickOutOfRange.
std::vector<RevealedStructure> destruction_targets(const SystemModel& model,
                                                   const Scenario& scenario,
                                                   const StructureSpec& detection,
                                                   int tick);

// Minimum-cost component improvements after which no qualifying structure
// survives inside the union of the target vertex sets. Exact search:
// candidate actions are raises to threshold+1 (leaves the low band) or
// secondary_threshold+1 (leaves the detection universe entirely), explored
// in increasing total-cost order; destruction is decided by re-running
// revelation on the improved colors, not by structure-specific arithmetic.
// Throws Infeasible when no action set works within the scale.
ImprovementPlan destruction_plan(const ColoredGraph& graph,
                                 const std::vector<RevealedStructure>& structures,
                                 const StateAssignment& states,
                                 const StructureSpec& spec,
                                 const OrdinalScale& scale,
                                 const CostFn& cost = level_step_cost());

// Applies the chosen actions to a copy of the states: the global level and
// any lower per-function overrides are lifted to to_level. Throws
// LevelMismatch when an action's from_level disagrees with the assignment.
StateAssignment apply_plan(const StateAssignment& states,
                           const ImprovementPlan& plan);

void to_json(nlohmann::json& j, const ImprovementAction& a);
void to_json(nlohmann::json& j, const ImprovementPlan& plan);

} // namespace cliquetrack
