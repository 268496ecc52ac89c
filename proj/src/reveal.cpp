#include "cliquetrack/reveal.hpp"

#include <algorithm>
#include <set>

namespace cliquetrack {

const char* kind_name(StructureKind kind) {
    switch (kind) {
    case StructureKind::Clique: return "Clique";
    case StructureKind::QuasiEdge: return "QuasiEdge";
    case StructureKind::QuasiVertex: return "QuasiVertex";
    case StructureKind::QuasiBoth: return "QuasiBoth";
    case StructureKind::SubClique: return "SubClique";
    case StructureKind::QuasiSubClique: return "QuasiSubClique";
    }
    return "?";
}

StructureSpec resolve_spec(const StructureSpec& spec, int cluster_function_count,
                           const OrdinalScale& scale) {
    StructureSpec r = spec;
    if (!r.min_size) r.min_size = cluster_function_count;
    if (!r.secondary_threshold)
        r.secondary_threshold = std::min(r.threshold + 1, scale.levels);

    if (r.threshold < 1 || r.threshold > scale.levels)
        throw Error(ErrorCode::BadSpec,
                    "threshold " + std::to_string(r.threshold) + " outside scale 1.." +
                        std::to_string(scale.levels));
    if (*r.min_size < 1)
        throw Error(ErrorCode::BadSpec, "min_size must be at least 1");
    if (r.max_missing_edges < 0 || r.max_offending_vertices < 0)
        throw Error(ErrorCode::BadSpec, "deficiency budgets must be non-negative");
    if (*r.secondary_threshold < r.threshold || *r.secondary_threshold > scale.levels)
        throw Error(ErrorCode::BadSpec,
                    "secondary threshold " + std::to_string(*r.secondary_threshold) +
                        " must lie in [threshold, " + std::to_string(scale.levels) + "]");
    return r;
}

std::string canonical_id(StructureKind kind, int threshold,
                         std::vector<ComponentId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    std::string id = kind_name(kind);
    id += '/';
    id += std::to_string(threshold);
    id += '/';
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) id += ',';
        id += vertices[i];
    }
    return id;
}

std::string RevealedStructure::canonical_id() const {
    return cliquetrack::canonical_id(kind, spec.threshold, vertices);
}

namespace {

int required_min_size(const StructureSpec& spec) {
    if (!spec.min_size)
        throw Error(ErrorCode::BadSpec,
                    "min_size is unresolved; call resolve_spec with the cluster size");
    return *spec.min_size;
}

int secondary_of(const StructureSpec& spec) {
    // Uncapped threshold+1 behaves like min(threshold+1, L): no color
    // exceeds L anyway.
    return spec.secondary_threshold ? *spec.secondary_threshold : spec.threshold + 1;
}

// Index-based view for the search routines. Vertices are kept in
// lexicographic id order so results never depend on input vertex order.
struct IndexGraph {
    std::vector<ComponentId> ids;
    std::vector<int> color;
    std::vector<std::vector<std::uint8_t>> adj;

    std::size_t size() const { return ids.size(); }
};

template <typename Pred>
IndexGraph induced_graph(const ColoredGraph& g, Pred keep) {
    IndexGraph ig;
    for (const auto& v : g.vertices)
        if (keep(g.colors.at(v))) ig.ids.push_back(v);
    std::sort(ig.ids.begin(), ig.ids.end());

    const std::size_t n = ig.ids.size();
    ig.color.resize(n);
    ig.adj.assign(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) ig.color[i] = g.colors.at(ig.ids[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.edges.count(ColoredGraph::make_edge(ig.ids[i], ig.ids[j])))
                ig.adj[i][j] = ig.adj[j][i] = 1;
    return ig;
}

std::vector<int> intersect_neighbors(const std::vector<int>& set, int v,
                                     const IndexGraph& g) {
    std::vector<int> out;
    out.reserve(set.size());
    for (int u : set)
        if (g.adj[v][u]) out.push_back(u);
    return out;
}

// Bron-Kerbosch with pivoting; emits every maximal clique exactly once.
void bron_kerbosch(std::vector<int>& current, std::vector<int> candidates,
                   std::vector<int> excluded, const IndexGraph& g,
                   std::vector<std::vector<int>>& out) {
    if (candidates.empty() && excluded.empty()) {
        out.push_back(current);
        return;
    }

    // Pivot: the vertex of P u X covering most of P, lowest index on ties.
    int pivot = -1;
    int best = -1;
    auto consider = [&](int u) {
        int covered = 0;
        for (int v : candidates)
            if (g.adj[u][v]) ++covered;
        if (covered > best) {
            best = covered;
            pivot = u;
        }
    };
    for (int u : candidates) consider(u);
    for (int u : excluded) consider(u);

    std::vector<int> branch;
    for (int v : candidates)
        if (!g.adj[pivot][v]) branch.push_back(v);

    for (int v : branch) {
        current.push_back(v);
        bron_kerbosch(current, intersect_neighbors(candidates, v, g),
                      intersect_neighbors(excluded, v, g), g, out);
        current.pop_back();
        candidates.erase(std::find(candidates.begin(), candidates.end(), v));
        excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
}

// Every clique of size >= min_size, maximal or not.
void all_cliques(std::vector<int>& current, int next, const IndexGraph& g,
                 int min_size, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) >= min_size) out.push_back(current);
    for (int v = next; v < static_cast<int>(g.size()); ++v) {
        bool joined = true;
        for (int u : current) {
            if (!g.adj[u][v]) {
                joined = false;
                break;
            }
        }
        if (!joined) continue;
        current.push_back(v);
        all_cliques(current, v + 1, g, min_size, out);
        current.pop_back();
    }
}

RevealedStructure build_structure(const std::vector<int>& members, const IndexGraph& g,
                                  const StructureSpec& spec) {
    RevealedStructure s;
    s.spec = spec;
    for (int v : members) s.vertices.push_back(g.ids[v]);
    std::sort(s.vertices.begin(), s.vertices.end());

    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!g.adj[members[i]][members[j]])
                s.missing_edges.push_back(
                    ColoredGraph::make_edge(g.ids[members[i]], g.ids[members[j]]));
    std::sort(s.missing_edges.begin(), s.missing_edges.end());

    for (int v : members)
        if (g.color[v] > spec.threshold) s.offending_vertices.push_back(g.ids[v]);
    std::sort(s.offending_vertices.begin(), s.offending_vertices.end());

    const bool undersized =
        static_cast<int>(s.vertices.size()) < required_min_size(spec);
    const bool miss = !s.missing_edges.empty();
    const bool off = !s.offending_vertices.empty();
    if (!miss && !off)
        s.kind = undersized ? StructureKind::SubClique : StructureKind::Clique;
    else if (undersized)
        s.kind = StructureKind::QuasiSubClique;
    else if (miss && off)
        s.kind = StructureKind::QuasiBoth;
    else
        s.kind = miss ? StructureKind::QuasiEdge : StructureKind::QuasiVertex;
    return s;
}

void sort_structures(std::vector<RevealedStructure>& out) {
    std::sort(out.begin(), out.end(),
              [](const RevealedStructure& a, const RevealedStructure& b) {
                  if (a.vertices.size() != b.vertices.size())
                      return a.vertices.size() > b.vertices.size();
                  return a.vertices < b.vertices;
              });
}

// Branch-and-bound enumeration of budget-feasible vertex sets.
struct QuasiSearch {
    const IndexGraph& g;
    int low_threshold;   // l
    int edge_budget;     // d_e
    int vertex_budget;   // d_v
    int min_size;
    bool maximal_only;
    std::set<std::vector<int>> found;

    int missing_within(const std::vector<int>& set) const {
        int miss = 0;
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j)
                if (!g.adj[set[i]][set[j]]) ++miss;
        return miss;
    }

    int offending_within(const std::vector<int>& set) const {
        int off = 0;
        for (int v : set)
            if (g.color[v] > low_threshold) ++off;
        return off;
    }

    bool can_extend(const std::vector<int>& set, int miss, int off, int v) const {
        if (g.color[v] > low_threshold && off + 1 > vertex_budget) return false;
        int extra = 0;
        for (int u : set)
            if (!g.adj[u][v]) ++extra;
        return miss + extra <= edge_budget;
    }

    void emit(const std::vector<int>& set, int miss, int off) {
        if (static_cast<int>(set.size()) < min_size) return;
        if (maximal_only) {
            // Maximality against the whole universe, not just this subtree.
            std::vector<std::uint8_t> member(g.size(), 0);
            for (int v : set) member[v] = 1;
            for (int v = 0; v < static_cast<int>(g.size()); ++v)
                if (!member[v] && can_extend(set, miss, off, v)) return;
        }
        found.insert(set);
    }

    void search(std::vector<int>& current, int next, int miss, int off) {
        const int n = static_cast<int>(g.size());
        if (static_cast<int>(current.size()) + (n - next) < min_size) return;
        if (next == n) {
            emit(current, miss, off);
            return;
        }
        if (maximal_only) {
            // If everything still undecided fits in budget, the union is the
            // only set in this subtree that can be maximal.
            std::vector<int> all = current;
            for (int v = next; v < n; ++v) all.push_back(v);
            const int all_miss = missing_within(all);
            const int all_off = offending_within(all);
            if (all_miss <= edge_budget && all_off <= vertex_budget) {
                emit(all, all_miss, all_off);
                return;
            }
        }

        const int v = next;
        int extra_miss = 0;
        for (int u : current)
            if (!g.adj[u][v]) ++extra_miss;
        const int extra_off = g.color[v] > low_threshold ? 1 : 0;
        if (miss + extra_miss <= edge_budget && off + extra_off <= vertex_budget) {
            current.push_back(v);
            search(current, next + 1, miss + extra_miss, off + extra_off);
            current.pop_back();
        }
        search(current, next + 1, miss, off);
    }

    std::vector<std::vector<int>> run() {
        std::vector<int> current;
        search(current, 0, 0, 0);
        return {found.begin(), found.end()};
    }
};

} // namespace

StructureKind classify(const std::vector<ComponentId>& vertices,
                       const ColoredGraph& graph, const StructureSpec& spec) {
    const int min_size = required_min_size(spec);
    for (const auto& v : vertices)
        if (!graph.has_vertex(v))
            throw Error(ErrorCode::UnknownId, "vertex " + v + " not in graph");

    int miss = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!graph.adjacent(vertices[i], vertices[j])) ++miss;
    int off = 0;
    for (const auto& v : vertices)
        if (graph.color_of(v) > spec.threshold) ++off;

    const bool undersized = static_cast<int>(vertices.size()) < min_size;
    if (miss == 0 && off == 0)
        return undersized ? StructureKind::SubClique : StructureKind::Clique;
    if (undersized) return StructureKind::QuasiSubClique;
    if (miss > 0 && off > 0) return StructureKind::QuasiBoth;
    return miss > 0 ? StructureKind::QuasiEdge : StructureKind::QuasiVertex;
}

std::vector<RevealedStructure> find_cliques(const ColoredGraph& graph,
                                            const StructureSpec& spec) {
    const int min_size = required_min_size(spec);
    IndexGraph ig =
        induced_graph(graph, [&](int color) { return color <= spec.threshold; });

    std::vector<std::vector<int>> cliques;
    if (spec.maximal_only) {
        std::vector<int> all(ig.size());
        for (std::size_t i = 0; i < ig.size(); ++i) all[i] = static_cast<int>(i);
        std::vector<int> current;
        if (!all.empty()) bron_kerbosch(current, all, {}, ig, cliques);
    } else {
        std::vector<int> current;
        all_cliques(current, 0, ig, min_size, cliques);
    }

    std::vector<RevealedStructure> out;
    for (const auto& c : cliques) {
        if (static_cast<int>(c.size()) < min_size) continue;
        out.push_back(build_structure(c, ig, spec));
    }
    sort_structures(out);
    return out;
}

std::vector<RevealedStructure> find_quasi(const ColoredGraph& graph,
                                          const StructureSpec& spec) {
    if (spec.max_missing_edges == 0 && spec.max_offending_vertices == 0)
        return find_cliques(graph, spec);

    const int min_size = required_min_size(spec);
    const int secondary = secondary_of(spec);
    if (secondary < spec.threshold)
        throw Error(ErrorCode::BadSpec, "secondary threshold below threshold");

    // Vertices above l' can never participate; with a zero vertex budget
    // the universe shrinks to the low band directly.
    const int cap = spec.max_offending_vertices > 0 ? secondary : spec.threshold;
    IndexGraph ig = induced_graph(graph, [&](int color) { return color <= cap; });
    if (ig.size() > 40)
        throw Error(ErrorCode::GraphTooLarge,
                    "quasi-structure enumeration supports at most 40 candidate "
                    "vertices, got " +
                        std::to_string(ig.size()));

    QuasiSearch search{ig,
                       spec.threshold,
                       spec.max_missing_edges,
                       spec.max_offending_vertices,
                       min_size,
                       spec.maximal_only,
                       {}};
    std::vector<RevealedStructure> out;
    for (const auto& set : search.run()) out.push_back(build_structure(set, ig, spec));
    sort_structures(out);
    return out;
}

std::vector<RevealedStructure> find_structures(const ColoredGraph& graph,
                                               const StructureSpec& spec) {
    if (spec.max_missing_edges == 0 && spec.max_offending_vertices == 0)
        return find_cliques(graph, spec);
    return find_quasi(graph, spec);
}

void to_json(nlohmann::json& j, const RevealedStructure& s) {
    j = nlohmann::json{{"id", s.canonical_id()},
                       {"kind", kind_name(s.kind)},
                       {"vertices", s.vertices},
                       {"missing_edges", nlohmann::json::array()},
                       {"offending_vertices", s.offending_vertices},
                       {"threshold", s.spec.threshold}};
    for (const auto& [a, b] : s.missing_edges)
        j["missing_edges"].push_back(nlohmann::json::array({a, b}));
}

} // namespace cliquetrack
