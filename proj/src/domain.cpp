#include "aep/domain.hpp"

#include <algorithm>

namespace aep {

DomainModel::DomainModel(std::string label, std::vector<std::string> fluents,
                         std::vector<ActionSpec> actions)
    : label_(std::move(label)), fluent_ids_(std::move(fluents)) {
    std::sort(fluent_ids_.begin(), fluent_ids_.end());
    for (std::size_t i = 0; i < fluent_ids_.size(); ++i) {
        if (!fluent_lookup_.emplace(fluent_ids_[i], i).second) {
            throw InputError("duplicate fluent id: " + fluent_ids_[i]);
        }
    }

    std::sort(actions.begin(), actions.end(),
              [](const ActionSpec& a, const ActionSpec& b) { return a.id < b.id; });
    actions_.reserve(actions.size());
    for (const ActionSpec& spec : actions) {
        if (spec.cost < Rational(0)) {
            throw InputError("negative cost on action: " + spec.id);
        }
        GroundAction ground;
        ground.id = spec.id;
        ground.pre = make_fluent_set(spec.pre);
        ground.add = make_fluent_set(spec.add);
        ground.del = make_fluent_set(spec.del);
        ground.cost = spec.cost;
        if (ground.add.intersects(ground.del)) {
            throw InputError("add/delete effects overlap on action: " + spec.id);
        }
        if (!action_lookup_.emplace(ground.id, actions_.size()).second) {
            throw InputError("duplicate action id: " + ground.id);
        }
        actions_.push_back(std::move(ground));
    }
}

std::optional<std::size_t> DomainModel::fluent_index(std::string_view id) const {
    auto it = fluent_lookup_.find(std::string(id));
    if (it == fluent_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> DomainModel::action_index(std::string_view id) const {
    auto it = action_lookup_.find(std::string(id));
    if (it == action_lookup_.end()) return std::nullopt;
    return it->second;
}

const GroundAction& DomainModel::action_by_id(std::string_view id) const {
    auto index = action_index(id);
    if (!index) throw UnknownActionError(std::string(id));
    return actions_[*index];
}

std::vector<ActionSpec> DomainModel::action_specs() const {
    std::vector<ActionSpec> specs;
    specs.reserve(actions_.size());
    for (const GroundAction& a : actions_) {
        ActionSpec spec;
        spec.id = a.id;
        spec.pre = fluent_names(a.pre);
        spec.add = fluent_names(a.add);
        spec.del = fluent_names(a.del);
        spec.cost = a.cost;
        specs.push_back(std::move(spec));
    }
    return specs;
}

FluentSet DomainModel::make_fluent_set(std::span<const std::string> ids) const {
    FluentSet set(num_fluents());
    for (const std::string& id : ids) {
        auto index = fluent_index(id);
        if (!index) throw InputError("unknown fluent id: " + id);
        set.set(*index);
    }
    return set;
}

std::vector<std::string> DomainModel::fluent_names(const FluentSet& set) const {
    std::vector<std::string> out;
    for (std::size_t bit : set.bits()) out.push_back(fluent_ids_[bit]);
    return out;
}

PlanningProblem DomainModel::make_problem(std::span<const std::string> initial,
                                          std::span<const std::string> goal) const {
    return PlanningProblem{make_state(initial), make_fluent_set(goal)};
}

bool DomainModel::is_applicable(const State& state, std::size_t action_index) const {
    return state.contains_all(actions_[action_index].pre);
}

bool DomainModel::is_applicable(const State& state, std::string_view action_id) const {
    auto index = action_index(action_id);
    if (!index) throw UnknownActionError(std::string(action_id));
    return is_applicable(state, *index);
}

State DomainModel::apply(const State& state, std::size_t action_index) const {
    const GroundAction& a = actions_[action_index];
    if (!state.contains_all(a.pre)) {
        throw PreconditionError("action not applicable: " + a.id);
    }
    return state.progressed(a.add, a.del);
}

State DomainModel::apply(const State& state, std::string_view action_id) const {
    auto index = action_index(action_id);
    if (!index) throw UnknownActionError(std::string(action_id));
    return apply(state, *index);
}

std::vector<std::size_t> DomainModel::applicable_actions(const State& state) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < actions_.size(); ++i) {
        if (state.contains_all(actions_[i].pre)) out.push_back(i);
    }
    return out;
}

bool validate_plan(const DomainModel& model, const PlanningProblem& problem, const Plan& plan) {
    State state = problem.initial;
    Rational total(0);
    for (const std::string& id : plan.actions) {
        auto index = model.action_index(id);
        if (!index) return false;
        if (!model.is_applicable(state, *index)) return false;
        state = state.progressed(model.action(*index).add, model.action(*index).del);
        total += model.action(*index).cost;
    }
    return state.contains_all(problem.goal) && total == plan.cost;
}

Rational plan_cost(const DomainModel& model, std::span<const std::string> actions) {
    Rational total(0);
    for (const std::string& id : actions) total += model.action_by_id(id).cost;
    return total;
}

}  // namespace aep
