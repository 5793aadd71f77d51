#pragma once

#include <stdexcept>
#include <string>

namespace moralens {

// Violation of an input or pipeline contract (bad file, bad config,
// missing stage artifact, stale manifest). CLI exit code 2.
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative solver failed to reach its tolerance. CLI exit code 3.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_objective)
        : std::runtime_error(what), last_objective_(last_objective) {}

    double last_objective() const { return last_objective_; }

private:
    double last_objective_;
};

}  // namespace moralens
