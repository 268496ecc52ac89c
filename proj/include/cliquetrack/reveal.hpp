#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cliquetrack/graph.hpp"
#include "cliquetrack/model.hpp"

namespace cliquetrack {

enum class StructureKind {
    Clique,         // complete, all colors <= threshold, big enough
    QuasiEdge,      // missing edges only
    QuasiVertex,    // vertices above threshold only
    QuasiBoth,      // both deficiencies
    SubClique,      // deficiency-free but below the target size
    QuasiSubClique, // deficient and below the target size
};

const char* kind_name(StructureKind kind);

// Detection parameters.
//
//   threshold               l: vertices count as "low" when color <= l
//   min_size                required vertex count; empty = use the cluster's
//                           function count at resolve time
//   max_missing_edges       d_e: tolerated absent edges inside the set
//   max_offending_vertices  d_v: tolerated vertices with color in (l, l']
//   secondary_threshold     l': cap on offending-vertex colors; empty =
//                           min(l + 1, L)
//   maximal_only            report only maximal qualifying sets
struct StructureSpec {
    int threshold = 1;
    std::optional<int> min_size;
    int max_missing_edges = 0;
    int max_offending_vertices = 0;
    std::optional<int> secondary_threshold;
    bool maximal_only = true;
};

// Fills min_size / secondary_threshold defaults and range-checks against
// the scale. Throws BadSpec on an inconsistent spec.
StructureSpec resolve_spec(const StructureSpec& spec, int cluster_function_count,
                           const OrdinalScale& scale);

struct RevealedStructure {
    std::vector<ComponentId> vertices; // sorted lexicographically
    StructureKind kind = StructureKind::Clique;
    std::vector<Edge> missing_edges;
    std::vector<ComponentId> offending_vertices;
    StructureSpec spec;

    std::string canonical_id() const;
};

// Track identity key: "<kind>/<threshold>/<v1,v2,...>" with vertices in
// lexicographic order. Equal structures produce equal ids.
std::string canonical_id(StructureKind kind, int threshold,
                         std::vector<ComponentId> vertices);

// Places a vertex set in the structure taxonomy relative to the spec.
// Requires a resolved min_size; throws UnknownId for foreign vertices.
StructureKind classify(const std::vector<ComponentId>& vertices,
                       const ColoredGraph& graph, const StructureSpec& spec);

// Maximal cliques within the subgraph induced by vertices of color <=
// threshold, kept when their size reaches min_size. Recursive pivot-based
// enumeration. With maximal_only=false, every qualifying clique is
// reported, not just maximal ones. Output sorted by (size desc, vertex
// list); empty when nothing qualifies.
std::vector<RevealedStructure> find_cliques(const ColoredGraph& graph,
                                            const StructureSpec& spec);

// Maximal vertex sets whose deficiencies stay within budget: at most
// max_missing_edges absent pairs, at most max_offending_vertices members
// with color in (threshold, secondary_threshold]. Branch-and-bound over
// vertex subsets with budget pruning; intended for desk-scale graphs
// (|V| up to a few tens).
std::vector<RevealedStructure> find_quasi(const ColoredGraph& graph,
                                          const StructureSpec& spec);

// Dispatch: find_cliques when both deficiency budgets are zero, find_quasi
// otherwise.
std::vector<RevealedStructure> find_structures(const ColoredGraph& graph,
                                               const StructureSpec& spec);

void to_json(nlohmann::json& j, const RevealedStructure& s);

} // namespace cliquetrack
