#include "cliquetrack/oracle.hpp"

#include <algorithm>
#include <bit>

// Reference implementation on purpose: plain subset scan, counting rules
// restated from scratch. Nothing here calls into the search code it is
// meant to arbitrate.

namespace cliquetrack {

namespace {

struct FlatGraph {
    std::vector<ComponentId> ids; // lexicographic
    std::vector<int> color;
    std::vector<std::vector<bool>> adj;
};

FlatGraph flatten(const ColoredGraph& g) {
    FlatGraph fg;
    fg.ids = g.vertices;
    std::sort(fg.ids.begin(), fg.ids.end());
    const std::size_t n = fg.ids.size();
    fg.color.resize(n);
    fg.adj.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) fg.color[i] = g.colors.at(fg.ids[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) fg.adj[i][j] = g.adjacent(fg.ids[i], fg.ids[j]);
    return fg;
}

struct SubsetFacts {
    bool allowed = false; // no member color beyond the secondary threshold
    int missing = 0;
    int offending = 0;
};

SubsetFacts inspect(unsigned mask, const FlatGraph& g, int low, int cap) {
    SubsetFacts facts;
    std::vector<int> members;
    for (int v = 0; v < static_cast<int>(g.ids.size()); ++v) {
        if (!(mask & (1u << v))) continue;
        if (g.color[v] > cap) return facts; // allowed stays false
        if (g.color[v] > low) ++facts.offending;
        members.push_back(v);
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!g.adj[members[i]][members[j]]) ++facts.missing;
    facts.allowed = true;
    return facts;
}

} // namespace

std::vector<RevealedStructure> oracle(const ColoredGraph& graph,
                                      const StructureSpec& spec) {
    const std::size_t n = graph.vertex_count();
    if (n > 20)
        throw Error(ErrorCode::GraphTooLarge,
                    "oracle handles at most 20 vertices, got " + std::to_string(n));
    if (!spec.min_size)
        throw Error(ErrorCode::BadSpec, "min_size is unresolved");

    const int min_size = *spec.min_size;
    const int low = spec.threshold;
    const int cap = spec.secondary_threshold ? *spec.secondary_threshold : low + 1;
    const int d_e = spec.max_missing_edges;
    const int d_v = spec.max_offending_vertices;

    FlatGraph fg = flatten(graph);

    auto qualifies = [&](const SubsetFacts& f) {
        return f.allowed && f.missing <= d_e && f.offending <= d_v;
    };

    std::vector<unsigned> kept;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        SubsetFacts facts = inspect(mask, fg, low, cap);
        if (!qualifies(facts)) continue;
        if (std::popcount(mask) < min_size) continue;
        if (spec.maximal_only) {
            bool extendable = false;
            for (int v = 0; v < static_cast<int>(n) && !extendable; ++v) {
                if (mask & (1u << v)) continue;
                if (qualifies(inspect(mask | (1u << v), fg, low, cap))) extendable = true;
            }
            if (extendable) continue;
        }
        kept.push_back(mask);
    }

    std::vector<RevealedStructure> out;
    for (unsigned mask : kept) {
        RevealedStructure s;
        s.spec = spec;
        std::vector<int> members;
        for (int v = 0; v < static_cast<int>(n); ++v)
            if (mask & (1u << v)) members.push_back(v);
        for (int v : members) s.vertices.push_back(fg.ids[v]);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!fg.adj[members[i]][members[j]])
                    s.missing_edges.push_back(
                        ColoredGraph::make_edge(fg.ids[members[i]], fg.ids[members[j]]));
        for (int v : members)
            if (fg.color[v] > low) s.offending_vertices.push_back(fg.ids[v]);
        std::sort(s.missing_edges.begin(), s.missing_edges.end());
        std::sort(s.offending_vertices.begin(), s.offending_vertices.end());

        const bool small = static_cast<int>(members.size()) < min_size;
        const bool has_miss = !s.missing_edges.empty();
        const bool has_off = !s.offending_vertices.empty();
        if (!has_miss && !has_off)
            s.kind = small ? StructureKind::SubClique : StructureKind::Clique;
        else if (small)
            s.kind = StructureKind::QuasiSubClique;
        else if (has_miss && has_off)
            s.kind = StructureKind::QuasiBoth;
        else
            s.kind = has_miss ? StructureKind::QuasiEdge : StructureKind::QuasiVertex;
        out.push_back(std::move(s));
    }

    std::sort(out.begin(), out.end(),
              [](const RevealedStructure& a, const RevealedStructure& b) {
                  if (a.vertices.size() != b.vertices.size())
                      return a.vertices.size() > b.vertices.size();
                  return a.vertices < b.vertices;
              });
    return out;
}

} // namespace cliquetrack
