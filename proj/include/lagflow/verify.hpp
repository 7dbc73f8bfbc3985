#pragma once

#include <string>

#include <json.hpp>

namespace lagflow {

struct VerifyReport {
    std::string suite;
    bool pass = false;
    nlohmann::ordered_json records;  // one entry per check
};

/// Off-shell Noether identity for every catalogued law over random smooth
/// non-solution fields (|A - sigma Q E| <= 1e-7 while |A| = O(1) for the
/// laws with a nonzero characteristic).
VerifyReport verify_noether(int fields_per_law = 20);

/// Stored Eulerian densities against the r^n rho conversion rule at random
/// state samples (1e-11 relative).
VerifyReport verify_eulerian_conversion(int samples_per_law = 1000);

/// Weighted Eulerian balance identities for random (F, h) and the
/// homogeneity conditions.
VerifyReport verify_inhomogeneous(int random_weights = 10);

/// Invariance of each finite-difference invariant basis under every admitted
/// generator (1e-11 relative, 100 random stencils, |a| <= 1) plus the basis
/// cardinalities.
VerifyReport verify_invariants(int stencils = 100);

/// Scheme invariance verdicts (including the expected projective failure of
/// the implicit scheme) and the mesh orthogonality criterion table.
VerifyReport verify_scheme_invariance();

VerifyReport run_verify_suite(const std::string& name);

}  // namespace lagflow
