#pragma once

#include <stdexcept>
#include <string>

namespace horo {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Structurally invalid input (zero vector, coincident points, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Degenerate geometric configuration (collinear points, zero-length segment, ...).
class DegenerateInput : public std::invalid_argument {
public:
    explicit DegenerateInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A scenario constraint cannot be satisfied at the requested parameter.
class InfeasibleScenario : public std::runtime_error {
public:
    InfeasibleScenario(const std::string& constraint, const std::string& what)
        : std::runtime_error(what), constraint_(constraint) {}
    const std::string& constraint() const { return constraint_; }

private:
    std::string constraint_;
};

/// A solved configuration violates the packing conditions.
class PackingViolation : public std::runtime_error {
public:
    PackingViolation(const std::string& constraint, double margin, const std::string& what)
        : std::runtime_error(what), constraint_(constraint), margin_(margin) {}
    const std::string& constraint() const { return constraint_; }
    double margin() const { return margin_; }

private:
    std::string constraint_;
    double margin_;
};

namespace numerics {

/// Count of numerical clamps applied (cosh arguments nudged into range and
/// the like). Distinct from domain errors; queryable from tests and the CLI.
long clamp_count();
void reset_clamp_count();
void note_clamp(const char* where);

} // namespace numerics

} // namespace horo
