#pragma once

#include <vector>

#include "cliquetrack/graph.hpp"
#include "cliquetrack/model.hpp"

namespace cliquetrack {

// Worst-wins merge for one vertex seen by several functions: the minimum
// level. Throws EmptySet for an empty list.
int merge_color(const std::vector<int>& levels);

// Complete graph over the function's components; each vertex colored with
// the state that function observes. Throws UnknownId / MissingState.
ColoredGraph function_graph(const SystemModel& model, const FunctionId& function,
                            const StateAssignment& states);

// Fused graph for a cluster: vertex and edge union over the member function
// graphs, vertex colors merged worst-wins. Union and min are commutative,
// associative and idempotent, so the result is independent of function
// order or duplication.
ColoredGraph integrated_graph(const SystemModel& model, const ClusterId& cluster,
                              const StateAssignment& states);

} // namespace cliquetrack
