#pragma once

#include "aep/errors.hpp"
#include "aep/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aep {

// Bit-indexed fluent subset over a model's fluent universe. Also used as the
// state representation: a state is exactly the set of fluents that hold.
class FluentSet {
public:
    FluentSet() = default;
    explicit FluentSet(std::size_t num_bits)
        : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

    std::size_t size() const { return num_bits_; }

    void set(std::size_t bit) { words_[bit / 64] |= std::uint64_t{1} << (bit % 64); }
    void reset(std::size_t bit) { words_[bit / 64] &= ~(std::uint64_t{1} << (bit % 64)); }
    bool test(std::size_t bit) const {
        return (words_[bit / 64] >> (bit % 64)) & 1;
    }

    // other subset-of this
    bool contains_all(const FluentSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (other.words_[i] & ~words_[i]) return false;
        }
        return true;
    }

    bool intersects(const FluentSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & other.words_[i]) return true;
        }
        return false;
    }

    // (this minus del) union add
    FluentSet progressed(const FluentSet& add, const FluentSet& del) const {
        FluentSet out(*this);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            out.words_[i] = (out.words_[i] & ~del.words_[i]) | add.words_[i];
        }
        return out;
    }

    std::vector<std::size_t> bits() const {
        std::vector<std::size_t> out;
        for (std::size_t b = 0; b < num_bits_; ++b) {
            if (test(b)) out.push_back(b);
        }
        return out;
    }

    bool operator==(const FluentSet&) const = default;

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::size_t num_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

using State = FluentSet;

struct StateHash {
    std::size_t operator()(const State& s) const { return s.hash(); }
};

// Authoring form of an action; referenced fluents are resolved and validated
// when a DomainModel is constructed.
struct ActionSpec {
    std::string id;
    std::vector<std::string> pre;
    std::vector<std::string> add;
    std::vector<std::string> del;
    Rational cost = Rational(1);
};

struct GroundAction {
    std::string id;
    FluentSet pre;
    FluentSet add;
    FluentSet del;
    Rational cost;
};

struct Plan {
    std::vector<std::string> actions;
    Rational cost = Rational(0);

    bool operator==(const Plan&) const = default;
};

struct PlanningProblem {
    State initial;
    FluentSet goal;
};

// Immutable ground model. Actions are stored sorted by id so that action
// indices give the lexicographic tie-break order used everywhere.
class DomainModel {
public:
    DomainModel(std::string label, std::vector<std::string> fluents,
                std::vector<ActionSpec> actions);

    const std::string& label() const { return label_; }
    std::size_t num_fluents() const { return fluent_ids_.size(); }
    const std::vector<std::string>& fluent_ids() const { return fluent_ids_; }
    std::optional<std::size_t> fluent_index(std::string_view id) const;

    std::size_t num_actions() const { return actions_.size(); }
    const GroundAction& action(std::size_t index) const { return actions_[index]; }
    std::optional<std::size_t> action_index(std::string_view id) const;
    const GroundAction& action_by_id(std::string_view id) const;
    bool has_action(std::string_view id) const { return action_index(id).has_value(); }

    std::vector<ActionSpec> action_specs() const;

    FluentSet make_fluent_set(std::span<const std::string> ids) const;
    State make_state(std::span<const std::string> ids) const { return make_fluent_set(ids); }
    std::vector<std::string> fluent_names(const FluentSet& set) const;

    PlanningProblem make_problem(std::span<const std::string> initial,
                                 std::span<const std::string> goal) const;

    bool is_applicable(const State& state, std::size_t action_index) const;
    bool is_applicable(const State& state, std::string_view action_id) const;

    State apply(const State& state, std::size_t action_index) const;
    State apply(const State& state, std::string_view action_id) const;

    std::vector<std::size_t> applicable_actions(const State& state) const;

private:
    std::string label_;
    std::vector<std::string> fluent_ids_;
    std::unordered_map<std::string, std::size_t> fluent_lookup_;
    std::vector<GroundAction> actions_;
    std::unordered_map<std::string, std::size_t> action_lookup_;
};

// True iff the plan applies step by step from the problem's initial state,
// the final state satisfies the goal, and the recorded cost matches.
bool validate_plan(const DomainModel& model, const PlanningProblem& problem, const Plan& plan);

Rational plan_cost(const DomainModel& model, std::span<const std::string> actions);

}  // namespace aep
