#pragma once

#include <stdexcept>
#include <string>

namespace lagflow {

/// Thrown when an operation is asked for outside the (n, gamma, entropy)
/// regime it is defined in (e.g. the n=0 momentum law on a spherical flow).
struct applicability_error : std::invalid_argument {
    explicit applicability_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Thrown when a constraint needed to invert a relation degenerates
/// (e.g. S_r = 0 while recovering the mass coordinate in the power case).
struct singular_constraint_error : std::domain_error {
    explicit singular_constraint_error(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace lagflow
