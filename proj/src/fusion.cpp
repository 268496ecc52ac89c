#include "cliquetrack/fusion.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

namespace cliquetrack {

Edge ColoredGraph::make_edge(const ComponentId& a, const ComponentId& b) {
    if (a == b) throw Error(ErrorCode::BadSpec, "self-loop on " + a);
    return a < b ? Edge{a, b} : Edge{b, a};
}

bool ColoredGraph::has_vertex(const ComponentId& v) const {
    return colors.count(v) > 0;
}

bool ColoredGraph::adjacent(const ComponentId& a, const ComponentId& b) const {
    if (a == b) return false;
    return edges.count(make_edge(a, b)) > 0;
}

int ColoredGraph::color_of(const ComponentId& v) const {
    auto it = colors.find(v);
    if (it == colors.end())
        throw Error(ErrorCode::UnknownId, "vertex " + v + " not in graph");
    return it->second;
}

int merge_color(const std::vector<int>& levels) {
    if (levels.empty())
        throw Error(ErrorCode::EmptySet, "merge_color over an empty level list");
    return *std::min_element(levels.begin(), levels.end());
}

ColoredGraph function_graph(const SystemModel& model, const FunctionId& function,
                            const StateAssignment& states) {
    const FunctionDef* def = model.find_function(function);
    if (!def) throw Error(ErrorCode::UnknownId, "unknown function id " + function);

    // Vertices in model declaration order, duplicates collapsed.
    std::set<ComponentId> members(def->components.begin(), def->components.end());
    ColoredGraph g;
    for (const auto& c : model.components) {
        if (!members.count(c)) continue;
        g.vertices.push_back(c);
        g.colors[c] = states.level_for(c, function);
    }
    // Components outside the model's list would be a validation failure;
    // still color them so the graph is usable on unvalidated input.
    for (const auto& c : def->components) {
        if (!g.colors.count(c)) {
            g.vertices.push_back(c);
            g.colors[c] = states.level_for(c, function);
        }
    }

    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
            g.edges.insert(ColoredGraph::make_edge(g.vertices[i], g.vertices[j]));
    return g;
}

ColoredGraph integrated_graph(const SystemModel& model, const ClusterId& cluster,
                              const StateAssignment& states) {
    const ClusterDef* def = model.find_cluster(cluster);
    if (!def) throw Error(ErrorCode::UnknownId, "unknown cluster id " + cluster);

    std::map<ComponentId, std::vector<int>> seen_colors;
    std::set<Edge> edges;
    for (const auto& fid : def->functions) {
        ColoredGraph fg = function_graph(model, fid, states);
        for (const auto& v : fg.vertices) seen_colors[v].push_back(fg.colors[v]);
        edges.insert(fg.edges.begin(), fg.edges.end());
    }

    ColoredGraph g;
    g.edges = std::move(edges);
    for (const auto& c : model.components) {
        auto it = seen_colors.find(c);
        if (it == seen_colors.end()) continue;
        g.vertices.push_back(c);
        g.colors[c] = merge_color(it->second);
        seen_colors.erase(it);
    }
    for (auto& [c, levels] : seen_colors) { // vertices outside the model list
        g.vertices.push_back(c);
        g.colors[c] = merge_color(levels);
    }
    return g;
}

std::string to_dot(const ColoredGraph& graph, const OrdinalScale& scale,
                   const std::string& name) {
    std::string safe_name;
    for (char ch : name)
        safe_name += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') ? ch : '_';
    if (safe_name.empty()) safe_name = "G";

    std::ostringstream out;
    out << "graph " << safe_name << " {\n";
    out << "  node [shape=circle style=filled];\n";
    for (const auto& v : graph.vertices) {
        int color = graph.colors.at(v);
        double band = scale.levels > 1
                          ? static_cast<double>(color - 1) / (scale.levels - 1)
                          : 1.0;
        char fill[32];
        std::snprintf(fill, sizeof fill, "0.000 0.000 %.3f", band);
        out << "  \"" << v << "\" [label=\"" << v << " (" << color << ")\" fillcolor=\""
            << fill << "\" fontcolor=\"" << (band < 0.5 ? "white" : "black") << "\"];\n";
    }
    for (const auto& [a, b] : graph.edges)
        out << "  \"" << a << "\" -- \"" << b << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace cliquetrack
