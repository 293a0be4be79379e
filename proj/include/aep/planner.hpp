#pragma once

#include "aep/domain.hpp"

#include <cstdint>
#include <optional>

namespace aep {

struct SearchLimits {
    std::uint64_t max_expansions = 1'000'000;
};

// All plans for one (model, problem) pair with cost at most zeta * c(optimal).
// Plans are emitted in depth-first order branching over actions in ascending
// id order, so repeated calls give identical sequences.
struct CandidatePlanSet {
    std::vector<Plan> plans;
    Rational optimal_cost = Rational(0);
    Rational zeta = Rational(1);
    bool truncated = false;
};

// Minimum-cost plan, or nullopt when the goal is unreachable. Among
// equal-cost optima the lexicographically smallest action sequence is
// returned. Throws BudgetExceededError when the expansion budget runs out
// before either verdict.
std::optional<Plan> optimal_plan(const DomainModel& model, const PlanningProblem& problem,
                                 const SearchLimits& limits = {});

// Exhaustive enumeration of goal-achieving action sequences with cost at
// most zeta * c(optimal), where a sequence may not revisit a state within
// itself. Includes at least one optimal plan even when max_plans truncates
// the enumeration. Throws UnsolvableError when no plan exists.
CandidatePlanSet enumerate_candidate_plans(const DomainModel& model,
                                           const PlanningProblem& problem, const Rational& zeta,
                                           std::size_t max_plans = 1000,
                                           const SearchLimits& limits = {});

}  // namespace aep
