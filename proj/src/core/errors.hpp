#pragma once

#include <stdexcept>
#include <string>

namespace metriclab {

// Malformed input document (bad JSON, wrong field types).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally broken data (non-square matrix, label/matrix size mismatch).
// Distinct from a metric-axiom violation, which is reported, not thrown.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration was refused because it would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, unsigned long long required)
        : std::runtime_error(what), required_budget(required) {}
    unsigned long long required_budget;
};

}  // namespace metriclab
