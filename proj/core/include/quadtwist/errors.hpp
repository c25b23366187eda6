#pragma once

#include <stdexcept>
#include <string>

namespace quadtwist {

// Bad user input (exit code 2 at the CLI).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed, e.g. a per-place index term that is not a
// power of two (exit code 3 at the CLI).
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration exceeded its configured budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace quadtwist
