#pragma once

#include <stdexcept>
#include <string>

namespace gpvar {

/// Invalid parameter or argument outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A root bracket without a sign change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative method ran out of budget before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The attractive condensate collapsed during relaxation. This is a physical
/// outcome, not a numerical failure.
class CollapseError : public std::runtime_error {
public:
    CollapseError(const std::string& what, double rms_radius, int iteration)
        : std::runtime_error(what), rms_radius_(rms_radius), iteration_(iteration) {}

    double rms_radius() const noexcept { return rms_radius_; }
    int iteration() const noexcept { return iteration_; }

private:
    double rms_radius_;
    int iteration_;
};

} // namespace gpvar
