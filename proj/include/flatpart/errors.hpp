#pragma once

#include <stdexcept>
#include <string>

namespace flatpart {

// Request is valid but outside the configured feasibility limits (CLI exit 2).
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// Request would exceed a hard resource cap (CLI exit 3).
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// File or stream failure (CLI exit 4).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed; signals a bug, never a data finding.
struct IntegrityError : std::logic_error {
    explicit IntegrityError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace flatpart
