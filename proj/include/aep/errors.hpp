#pragma once

#include <stdexcept>
#include <string>

namespace aep {

// Schema violations, unknown identifiers, out-of-range parameters.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownActionError : public InputError {
public:
    explicit UnknownActionError(const std::string& id)
        : InputError("unknown action id: " + id) {}
};

class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// No plan exists for the given model/problem pair.
class UnsolvableError : public std::runtime_error {
public:
    explicit UnsolvableError(const std::string& what) : std::runtime_error(what) {}
};

// Search gave up before proving solvable or unsolvable.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

class EmptySupportError : public std::runtime_error {
public:
    explicit EmptySupportError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aep
