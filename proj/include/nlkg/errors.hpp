#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nlkg {

/// Invalid configuration. Carries the full list of violations so a user
/// can fix them all in one pass.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    explicit ConfigError(const std::string& msg)
        : ConfigError(std::vector<std::string>{msg}) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "configuration error:";
        for (const auto& e : v) { s += "\n  - "; s += e; }
        return s;
    }
    std::vector<std::string> violations_;
};

/// Input outside the mathematical domain of an operation
/// (e.g. a point outside the forward light cone).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed argument to an analysis routine (bad window, too few records).
class ArgumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation applied to an object in the wrong state (incomplete slice, ...).
class StateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical blow-up detected during time stepping.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(const std::string& msg, double t, long long step)
        : std::runtime_error(msg), t_(t), step_(step) {}
    double t() const { return t_; }
    long long step() const { return step_; }

private:
    double t_;
    long long step_;
};

/// Unreadable or inconsistent analysis input (missing slices, unordered rho).
class AnalysisInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated internal precondition (mismatched workspace, broken invariant).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace nlkg
