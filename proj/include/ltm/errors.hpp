#ifndef LTM_ERRORS_HPP
#define LTM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ltm {

// Argument outside the mathematical domain of an operation (point not in A,
// radius outside [r0,r1], inadmissible annulus pair, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Polar angle undefined at a chart centre.
struct CentreSingularity : DomainError {
    explicit CentreSingularity(const std::string& what) : DomainError(what) {}
};

// Derivative requested within the seam guard of a piecewise-smooth function.
struct SeamDerivative : DomainError {
    explicit SeamDerivative(const std::string& what) : DomainError(what) {}
};

// cos(alpha) outside (-1,1): the two bipolar radii cannot form a triangle.
struct DegenerateTriangle : DomainError {
    explicit DegenerateTriangle(const std::string& what) : DomainError(what) {}
};

// First-return iteration exhausted its budget without re-entering the section.
struct NoReturnWithinBudget : std::runtime_error {
    explicit NoReturnWithinBudget(const std::string& what) : std::runtime_error(what) {}
};

// A curve step too large (or a fiber collision) to lift uniquely to the cover.
struct LiftAmbiguity : std::runtime_error {
    explicit LiftAmbiguity(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive refinement exceeded its point budget.
struct PointBudgetExceeded : std::runtime_error {
    explicit PointBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An orbit point landed within the seam guard; the caller should re-seed.
struct SeamEncounter : std::runtime_error {
    explicit SeamEncounter(const std::string& what) : std::runtime_error(what) {}
};

// A Lyapunov/transport accumulator left the set of finite numbers.
struct NonFiniteAccumulation : std::runtime_error {
    explicit NonFiniteAccumulation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ltm

#endif
