#pragma once

#include <optional>
#include <string>

#include "hardy/qudit_core.hpp"

namespace hardy {

enum class StateKind { optimal, approximate, mes };

StateKind state_kind_from_name(const std::string& name);
std::string state_kind_name(StateKind kind);

/// Optimal Hardy state for d in 2..7: the tabulated 6-digit coefficient
/// matrices, renormalized to unit Frobenius norm. Outside 2..7 throws
/// RangeError (use the optimizer for other dimensions).
CoefficientMatrix optimal_state(int d);

/// Approximate optimal Hardy state for any d >= 1: the upper-triangular
/// Toeplitz matrix with alpha_{j-i+1} on superdiagonal j-i, where
/// alpha_r = beta_r / sqrt(d+1-r) and beta_r proportional to 1/r with
/// sum beta_r^2 = 1. Unit Frobenius norm holds exactly by construction.
CoefficientMatrix approx_state(int d);

/// Structural diagnostics: deviation from upper-triangularity, from
/// anti-diagonal reflection symmetry h_ij = h_{d-1-j,d-1-i}, and from
/// unit norm. Never throws.
struct StructureReport {
    double upper_triangular_defect = 0.0;
    double antidiagonal_symmetry_defect = 0.0;
    double normalization_defect = 0.0;
};
StructureReport validate_structure(const CoefficientMatrix& state);

/// A named state bundled with its published expected values, when tabulated.
struct CatalogEntry {
    int d;
    StateKind kind;
    CoefficientMatrix state;
    std::optional<double> expected_score;
    std::optional<double> expected_concurrence;
};
CatalogEntry catalog_entry(StateKind kind, int d);

// Published reference values reproduced by the acceptance suite, indexed by
// d = 2..7. The approximate-concurrence row and the d=4 error rate are kept
// exactly as printed in the source tables even though they are inconsistent
// with the state definitions above (see README, "Known discrepancies").
namespace reference {
std::optional<double> optimal_score(int d);
std::optional<double> approx_score(int d);        // also covers d in the scan table
std::optional<double> error_rate(int d);
std::optional<double> optimal_concurrence(int d);
std::optional<double> approx_concurrence(int d);
}  // namespace reference

}  // namespace hardy
