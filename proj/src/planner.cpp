#include "aep/planner.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace aep {

namespace {

struct SearchNode {
    Rational cost;
    std::vector<std::size_t> path;  // action indices
    State state;
};

// Priority order: lowest cost first, then lexicographically smallest action
// sequence. Action indices follow id order, so index comparison is id order.
struct NodeGreater {
    bool operator()(const SearchNode& a, const SearchNode& b) const {
        if (a.cost != b.cost) return a.cost > b.cost;
        return a.path > b.path;
    }
};

Plan to_plan(const DomainModel& model, const std::vector<std::size_t>& path,
             const Rational& cost) {
    Plan plan;
    plan.cost = cost;
    plan.actions.reserve(path.size());
    for (std::size_t index : path) plan.actions.push_back(model.action(index).id);
    return plan;
}

}  // namespace

std::optional<Plan> optimal_plan(const DomainModel& model, const PlanningProblem& problem,
                                 const SearchLimits& limits) {
    std::priority_queue<SearchNode, std::vector<SearchNode>, NodeGreater> open;
    std::unordered_set<State, StateHash> closed;

    open.push(SearchNode{Rational(0), {}, problem.initial});
    std::uint64_t expansions = 0;

    while (!open.empty()) {
        SearchNode node = open.top();
        open.pop();
        if (closed.contains(node.state)) continue;
        closed.insert(node.state);

        if (node.state.contains_all(problem.goal)) {
            return to_plan(model, node.path, node.cost);
        }
        if (++expansions > limits.max_expansions) {
            throw BudgetExceededError("optimal_plan exceeded expansion budget");
        }

        for (std::size_t index : model.applicable_actions(node.state)) {
            State next = node.state.progressed(model.action(index).add, model.action(index).del);
            if (closed.contains(next)) continue;
            SearchNode child;
            child.cost = node.cost + model.action(index).cost;
            child.path = node.path;
            child.path.push_back(index);
            child.state = std::move(next);
            open.push(std::move(child));
        }
    }
    return std::nullopt;
}

CandidatePlanSet enumerate_candidate_plans(const DomainModel& model,
                                           const PlanningProblem& problem, const Rational& zeta,
                                           std::size_t max_plans, const SearchLimits& limits) {
    if (zeta < Rational(1)) throw InputError("zeta must be at least 1");

    std::optional<Plan> best = optimal_plan(model, problem, limits);
    if (!best) throw UnsolvableError("no plan reaches the goal under model " + model.label());

    CandidatePlanSet result;
    result.optimal_cost = best->cost;
    result.zeta = zeta;
    const Rational bound = zeta * best->cost;

    // Depth-first over action indices in ascending order; a path may not
    // revisit one of its own states, which keeps the plan space finite even
    // with zero-cost actions.
    std::vector<std::size_t> path;
    std::vector<State> visited{problem.initial};

    auto dfs = [&](auto&& self, const State& state, const Rational& cost) -> bool {
        if (state.contains_all(problem.goal)) {
            if (result.plans.size() == max_plans) {
                result.truncated = true;
                return false;
            }
            result.plans.push_back(to_plan(model, path, cost));
        }
        for (std::size_t index : model.applicable_actions(state)) {
            Rational next_cost = cost + model.action(index).cost;
            if (next_cost > bound) continue;
            State next = state.progressed(model.action(index).add, model.action(index).del);
            if (std::find(visited.begin(), visited.end(), next) != visited.end()) continue;
            path.push_back(index);
            visited.push_back(std::move(next));
            bool keep_going = self(self, visited.back(), next_cost);
            visited.pop_back();
            path.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    dfs(dfs, problem.initial, Rational(0));

    // A truncated enumeration can stop before reaching any optimum; the set
    // always carries one, so swap the optimal plan in if needed.
    if (result.truncated) {
        bool has_optimum = std::any_of(result.plans.begin(), result.plans.end(),
                                       [&](const Plan& p) { return p.cost == best->cost; });
        if (!has_optimum && !result.plans.empty()) {
            result.plans.back() = *best;
        }
    }
    return result;
}

}  // namespace aep
