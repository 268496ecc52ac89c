#include "cliquetrack/plan.hpp"

#include <algorithm>
#include <set>

#include "cliquetrack/fusion.hpp"

namespace cliquetrack {

bool operator==(const ImprovementAction& a, const ImprovementAction& b) {
    return a.component == b.component && a.from_level == b.from_level &&
           a.to_level == b.to_level;
}

bool operator<(const ImprovementAction& a, const ImprovementAction& b) {
    if (a.component != b.component) return a.component < b.component;
    if (a.to_level != b.to_level) return a.to_level < b.to_level;
    return a.from_level < b.from_level;
}

CostFn level_step_cost() {
    return [](const ImprovementAction& a) { return a.to_level - a.from_level; };
}

CostFn uniform_action_cost() {
    return [](const ImprovementAction&) { return 1; };
}

std::vector<RevealedStructure> destruction_targets(const ColoredGraph& graph,
                                                   const StructureSpec& spec) {
    return find_structures(graph, spec);
}

std::vector<RevealedStructure> destruction_targets(const SystemModel& model,
                                                   const Scenario& scenario,
                                                   const StructureSpec& detection,
                                                   int tick) {
    if (tick < 0 || tick >= scenario.ticks)
        throw Error(ErrorCode::TickOutOfRange,
                    "tick " + std::to_string(tick) + " outside 0.." +
                        std::to_string(scenario.ticks - 1));
    const auto& entry = scenario.chain.at(tick);
    if (!entry) return {};
    const ClusterDef* cluster = model.find_cluster(*entry);
    StructureSpec resolved = resolve_spec(
        detection, cluster ? static_cast<int>(cluster->functions.size()) : 0,
        model.scale);
    return find_structures(tick_graph(model, scenario, tick), resolved);
}

namespace {

struct Candidate {
    ComponentId component;
    int from_level;
    // (to_level, cost), cheapest first.
    std::vector<std::pair<int, int>> options;
};

// Graph restricted to the targets' vertex union, with the action set
// applied: an improved component keeps max(old color, to_level) because the
// fused color is the minimum over per-function levels, all lifted to at
// least to_level.
ColoredGraph improved_subgraph(const ColoredGraph& graph,
                               const std::vector<ComponentId>& scope,
                               const std::vector<ImprovementAction>& actions) {
    ColoredGraph g;
    for (const auto& v : scope) {
        g.vertices.push_back(v);
        g.colors[v] = graph.color_of(v);
    }
    for (const auto& a : actions) {
        auto it = g.colors.find(a.component);
        if (it != g.colors.end()) it->second = std::max(it->second, a.to_level);
    }
    for (std::size_t i = 0; i < scope.size(); ++i)
        for (std::size_t j = i + 1; j < scope.size(); ++j)
            if (graph.adjacent(scope[i], scope[j]))
                g.edges.insert(ColoredGraph::make_edge(scope[i], scope[j]));
    return g;
}

struct PlanSearch {
    const ColoredGraph& graph;
    const std::vector<ComponentId>& scope;
    StructureSpec spec; // maximal_only forced on: emptiness is what matters
    const std::vector<Candidate>& candidates;
    std::vector<std::vector<ImprovementAction>> optima;

    bool destroyed(const std::vector<ImprovementAction>& actions) const {
        ColoredGraph g = improved_subgraph(graph, scope, actions);
        return find_structures(g, spec).empty();
    }

    // Enumerate action sets costing exactly `budget`; suffix_max[i] bounds
    // what candidates i.. can still spend.
    void dfs(std::size_t index, int budget, const std::vector<int>& suffix_max,
             std::vector<ImprovementAction>& chosen) {
        if (budget == 0) {
            if (destroyed(chosen)) optima.push_back(chosen);
            return;
        }
        if (index == candidates.size() || budget > suffix_max[index]) return;

        dfs(index + 1, budget, suffix_max, chosen);
        const Candidate& cand = candidates[index];
        for (const auto& [to_level, action_cost] : cand.options) {
            if (action_cost > budget) continue;
            chosen.push_back({cand.component, cand.from_level, to_level});
            dfs(index + 1, budget - action_cost, suffix_max, chosen);
            chosen.pop_back();
        }
    }
};

} // namespace

ImprovementPlan destruction_plan(const ColoredGraph& graph,
                                 const std::vector<RevealedStructure>& structures,
                                 const StateAssignment& states,
                                 const StructureSpec& spec,
                                 const OrdinalScale& scale,
                                 const CostFn& cost) {
    if (!spec.min_size)
        throw Error(ErrorCode::BadSpec, "min_size is unresolved");
    if (structures.empty()) return {{}, 0, {{}}};

    std::set<ComponentId> scope_set;
    for (const auto& s : structures)
        scope_set.insert(s.vertices.begin(), s.vertices.end());
    std::vector<ComponentId> scope(scope_set.begin(), scope_set.end());

    const int low = spec.threshold;
    const int cap = spec.secondary_threshold
                        ? *spec.secondary_threshold
                        : std::min(spec.threshold + 1, scale.levels);

    std::vector<Candidate> candidates;
    for (const auto& component : scope) {
        Candidate cand{component, states.effective_level(component), {}};
        // Raising past l removes the vertex from the low band; raising past
        // l' removes it from the detection universe. Intermediate targets
        // cost at least as much and achieve no more.
        std::set<int> targets;
        if (low + 1 <= scale.levels) targets.insert(low + 1);
        if (cap + 1 <= scale.levels) targets.insert(cap + 1);
        for (int to : targets) {
            if (to <= cand.from_level) continue;
            const int c = cost({component, cand.from_level, to});
            if (c <= 0)
                throw Error(ErrorCode::BadSpec, "cost model must price actions positively");
            cand.options.push_back({to, c});
        }
        std::sort(cand.options.begin(), cand.options.end(),
                  [](auto& a, auto& b) { return a.second < b.second; });
        candidates.push_back(std::move(cand));
    }

    std::vector<int> suffix_max(candidates.size() + 1, 0);
    for (std::size_t i = candidates.size(); i-- > 0;) {
        int best = 0;
        for (const auto& [to, c] : candidates[i].options) best = std::max(best, c);
        suffix_max[i] = suffix_max[i + 1] + best;
    }

    StructureSpec check_spec = spec;
    check_spec.maximal_only = true;
    PlanSearch search{graph, scope, check_spec, candidates, {}};
    for (int budget = 0; budget <= suffix_max[0]; ++budget) {
        std::vector<ImprovementAction> chosen;
        search.dfs(0, budget, suffix_max, chosen);
        if (!search.optima.empty()) break;
    }
    if (search.optima.empty())
        throw Error(ErrorCode::Infeasible,
                    "no improvement set within the scale destroys every target");

    for (auto& actions : search.optima) std::sort(actions.begin(), actions.end());
    std::sort(search.optima.begin(), search.optima.end(),
              [](const std::vector<ImprovementAction>& a,
                 const std::vector<ImprovementAction>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    search.optima.erase(std::unique(search.optima.begin(), search.optima.end()),
                        search.optima.end());

    ImprovementPlan plan;
    plan.actions = search.optima.front();
    plan.alternatives = search.optima;
    for (const auto& a : plan.actions) plan.total_cost += cost(a);
    return plan;
}

StateAssignment apply_plan(const StateAssignment& states, const ImprovementPlan& plan) {
    StateAssignment out = states;
    for (const auto& action : plan.actions) {
        const int current = out.effective_level(action.component);
        if (current != action.from_level)
            throw Error(ErrorCode::LevelMismatch,
                        "component " + action.component + " is at level " +
                            std::to_string(current) + ", plan expected " +
                            std::to_string(action.from_level));
        auto gl = out.global.find(action.component);
        if (gl != out.global.end()) gl->second = std::max(gl->second, action.to_level);
        for (auto& [key, level] : out.overrides)
            if (key.first == action.component) level = std::max(level, action.to_level);
    }
    return out;
}

void to_json(nlohmann::json& j, const ImprovementAction& a) {
    j = nlohmann::json{{"component", a.component}, {"from", a.from_level}, {"to", a.to_level}};
}

void to_json(nlohmann::json& j, const ImprovementPlan& plan) {
    j = nlohmann::json{{"actions", plan.actions},
                       {"cost", plan.total_cost},
                       {"alternatives", plan.alternatives}};
}

} // namespace cliquetrack
