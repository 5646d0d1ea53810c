#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fdh {

/// Transfer-function evaluation requested at (or numerically on top of) a pole.
class EvaluationAtPoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The least-squares design problem is singular (e.g. identically zero weighting).
class DesignDegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative design did not reach its tolerance within the iteration budget.
/// Carries the best tap vector found so the caller can still inspect or use it.
class ConvergenceFailure : public std::runtime_error {
public:
    ConvergenceFailure(const std::string& what, std::vector<double> best_taps,
                       double best_objective)
        : std::runtime_error(what),
          best_taps(std::move(best_taps)),
          best_objective(best_objective) {}

    std::vector<double> best_taps;
    double best_objective;
};

/// Input artifacts do not belong together (e.g. filter designed at another rate).
class ArtifactMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fdh
