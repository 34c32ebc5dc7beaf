#pragma once

#include <stdexcept>
#include <string>

namespace apx {

// Parameter outside its mathematical domain (weight index, disk membership, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition of an operation does not hold for the given input.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Two independent numerical routes disagree beyond tolerance. Carries both values
// so the caller can inspect the discrepancy instead of trusting either one.
struct numerical_error : std::runtime_error {
    double value_a;
    double value_b;
    numerical_error(const std::string& what, double a, double b)
        : std::runtime_error(what + " (got " + std::to_string(a) + " vs " + std::to_string(b) + ")"),
          value_a(a), value_b(b) {}
};

// Not enough usable data to produce the requested result (empty stable window, ...).
struct insufficient_data : std::runtime_error {
    explicit insufficient_data(const std::string& what) : std::runtime_error(what) {}
};

} // namespace apx
