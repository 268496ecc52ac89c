#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cliquetrack/model.hpp"

namespace cliquetrack {

// Undirected edge with ordered endpoints (first < second).
using Edge = std::pair<ComponentId, ComponentId>;

// Vertex-colored undirected graph. Vertex order is fixed at construction
// (model declaration order for fused graphs) so exports are deterministic.
struct ColoredGraph {
    std::vector<ComponentId> vertices;
    std::map<ComponentId, int> colors;
    std::set<Edge> edges;

    // Normalizes endpoint order; throws BadSpec on a self-loop.
    static Edge make_edge(const ComponentId& a, const ComponentId& b);

    bool has_vertex(const ComponentId& v) const;
    bool adjacent(const ComponentId& a, const ComponentId& b) const;
    // Throws UnknownId for a vertex outside the graph.
    int color_of(const ComponentId& v) const;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }
    bool empty() const { return vertices.empty(); }
};

// Graphviz rendering: label "id (color)", grayscale fill from worst (dark)
// to best (light). Output is byte-deterministic.
std::string to_dot(const ColoredGraph& graph, const OrdinalScale& scale,
                   const std::string& name = "G");

} // namespace cliquetrack
