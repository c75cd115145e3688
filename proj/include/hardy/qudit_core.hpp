#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hardy/errors.hpp"

namespace hardy {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerances used throughout. Structural zeros and norms are held to 1e-12,
// probabilistic residuals to 1e-10 -- both far below the 1e-5 scale of the
// reference tables the artifact reproduces.
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kResidualTol = 1e-10;
inline constexpr double kDependentTol = 1e-12;

enum class Side { alice, bob };

/// A pure two-qudit state |psi> = sum_ij h_ij |i>_A |j>_B stored as the
/// d x d coefficient matrix H = (h_ij). Row index = Alice basis label,
/// column index = Bob basis label. Frobenius norm is 1 within 1e-12.
class CoefficientMatrix {
  public:
    /// Validates d >= 1, finite entries, and unit Frobenius norm.
    explicit CoefficientMatrix(Matrix entries);

    /// Rescales `entries` to unit Frobenius norm, then validates.
    /// Throws DimensionError on an empty or zero matrix.
    static CoefficientMatrix normalized(Matrix entries);

    int d() const { return static_cast<int>(entries_.rows()); }
    const Matrix& entries() const { return entries_; }
    Complex entry(int i, int j) const { return entries_(i, j); }

    /// Largest |h_ij| below the diagonal (0 for upper-triangular states).
    double lower_triangular_defect() const;
    bool is_upper_triangular(double tol = kStructuralTol) const;

  private:
    Matrix entries_;
};

/// Reduced one-party density matrix. Hermitian, unit trace.
class DensityMatrix {
  public:
    explicit DensityMatrix(Matrix entries);

    int d() const { return static_cast<int>(entries_.rows()); }
    const Matrix& entries() const { return entries_; }

    /// tr(rho^2), real by hermiticity.
    double purity() const;

    /// Smallest eigenvalue; O(d^3), used by validation paths and tests.
    double min_eigenvalue() const;

  private:
    Matrix entries_;
};

/// An ordered orthonormal basis of C^d; vector m <-> measurement outcome m.
/// Stored as the d x d matrix whose m-th column is the outcome-m vector
/// (the measurement unitary with outcome projectors U|m><m|U^dag).
class MeasurementBasis {
  public:
    /// Validates pairwise inner products <v_m|v_n> = delta_mn within 1e-10.
    explicit MeasurementBasis(Matrix columns);

    static MeasurementBasis standard(int d);

    int d() const { return static_cast<int>(columns_.rows()); }
    const Matrix& columns() const { return columns_; }
    Vector vector(int m) const;

  private:
    Matrix columns_;
};

/// rho_A = H H^dag (side = alice) or rho_B = H^T (H^T)^dag (side = bob).
DensityMatrix reduced_density(const CoefficientMatrix& state, Side side);

/// Generalized concurrence sqrt(d/(d-1) * (1 - tr(rho_A^2))), in [0, 1].
/// Cross-checks the rho_A and rho_B routes against each other to 1e-10.
/// Throws DimensionError for d = 1.
double concurrence(const CoefficientMatrix& state);

/// Maximally entangled state, H = identity / sqrt(d).
CoefficientMatrix mes(int d);

/// Builds orthonormal v_0 ... v_{d-1} with v_m orthogonal to span(S_m) and
/// to v_0 ... v_{m-1}, where generators_per_level[m] lists the vectors S_m.
/// Intended for nested families S_0 >= S_1 >= ... >= S_{d-1}; each v_m is
/// picked deterministically: standard seed vectors are tried in index order
/// and the chosen vector is scaled so its leading nonzero component is real
/// positive. Throws ConstructionError naming the level when the complement
/// is exhausted.
MeasurementBasis orthonormal_complement_chain(
    int d, const std::vector<std::vector<Vector>>& generators_per_level);

/// The measurement settings forced (up to phase) by the two zero constraints
/// once A1 and B1 are the standard bases and the state is upper-triangular:
/// A2's vector u_m is orthogonal to every column c_n of H with n > m, and
/// B2's vector v_n is orthogonal to (the conjugate of) every row r_m with
/// m < n. Runs in O(d^3). Throws PreconditionError on non-triangular input.
struct ConstraintMeasurements {
    MeasurementBasis a2;
    MeasurementBasis b2;
};
ConstraintMeasurements constraint_measurements(const CoefficientMatrix& state);

}  // namespace hardy
