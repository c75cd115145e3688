#include "hardy/qudit_core.hpp"

#include <cmath>
#include <string>

namespace hardy {

namespace {

bool all_finite(const Matrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                return false;
    return true;
}

void require_square_nonempty(const Matrix& m, const char* what) {
    if (m.rows() < 1 || m.rows() != m.cols())
        throw DimensionError(std::string(what) + ": matrix must be square with d >= 1, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (!all_finite(m))
        throw DimensionError(std::string(what) + ": non-finite entries");
}

// Projects `v` against the orthonormal columns `basis.leftCols(k)` twice
// (classical Gram-Schmidt step with one re-orthogonalization pass).
void project_out(const Matrix& basis, Eigen::Index k, Vector& v) {
    if (k <= 0) return;
    const auto block = basis.leftCols(k);
    v.noalias() -= block * (block.adjoint() * v).eval();
    v.noalias() -= block * (block.adjoint() * v).eval();
}

// Scales v so that its leading component of appreciable size is real
// positive. Probabilities are invariant under this phase; fixing it makes
// the construction reproducible.
void fix_leading_phase(Vector& v) {
    constexpr double kLeadTol = 1e-8;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double a = std::abs(v(i));
        if (a > kLeadTol) {
            v *= std::conj(v(i)) / a;
            return;
        }
    }
}

}  // namespace

CoefficientMatrix::CoefficientMatrix(Matrix entries) : entries_(std::move(entries)) {
    require_square_nonempty(entries_, "CoefficientMatrix");
    const double norm = entries_.norm();
    if (std::abs(norm - 1.0) > kStructuralTol)
        throw PreconditionError("CoefficientMatrix: Frobenius norm " + std::to_string(norm) +
                                " is not 1 (use CoefficientMatrix::normalized)");
}

CoefficientMatrix CoefficientMatrix::normalized(Matrix entries) {
    require_square_nonempty(entries, "CoefficientMatrix");
    const double norm = entries.norm();
    if (norm < kStructuralTol)
        throw DimensionError("CoefficientMatrix: cannot normalize a zero matrix");
    entries /= norm;
    return CoefficientMatrix(std::move(entries));
}

double CoefficientMatrix::lower_triangular_defect() const {
    double worst = 0.0;
    for (int j = 0; j < d(); ++j)
        for (int i = j + 1; i < d(); ++i)
            worst = std::max(worst, std::abs(entries_(i, j)));
    return worst;
}

bool CoefficientMatrix::is_upper_triangular(double tol) const {
    return lower_triangular_defect() <= tol;
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    require_square_nonempty(entries_, "DensityMatrix");
    const double herm_defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > kStructuralTol)
        throw PreconditionError("DensityMatrix: hermiticity defect " + std::to_string(herm_defect));
    const Complex tr = entries_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kStructuralTol)
        throw PreconditionError("DensityMatrix: trace is not 1");
    // Spectral positivity is an O(d^3) eigen-solve; checked eagerly only at
    // small d, and available through min_eigenvalue() everywhere.
    if (d() <= 64 && min_eigenvalue() < -1e-10)
        throw PreconditionError("DensityMatrix: negative eigenvalue " +
                                std::to_string(min_eigenvalue()));
}

double DensityMatrix::purity() const { return entries_.squaredNorm(); }

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

MeasurementBasis::MeasurementBasis(Matrix columns) : columns_(std::move(columns)) {
    require_square_nonempty(columns_, "MeasurementBasis");
    const int n = d();
    const Matrix gram = columns_.adjoint() * columns_;
    const double defect = (gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (defect > kResidualTol)
        throw PreconditionError("MeasurementBasis: orthonormality defect " +
                                std::to_string(defect));
}

MeasurementBasis MeasurementBasis::standard(int d) {
    if (d < 1) throw DimensionError("MeasurementBasis::standard: d must be >= 1");
    return MeasurementBasis(Matrix::Identity(d, d));
}

Vector MeasurementBasis::vector(int m) const {
    if (m < 0 || m >= d())
        throw RangeError("MeasurementBasis: outcome " + std::to_string(m) +
                         " out of range for d = " + std::to_string(d()));
    return columns_.col(m);
}

DensityMatrix reduced_density(const CoefficientMatrix& state, Side side) {
    const Matrix& h = state.entries();
    Matrix rho;
    if (side == Side::alice) {
        rho.noalias() = h * h.adjoint();
    } else {
        const Matrix ht = h.transpose();
        rho.noalias() = ht * ht.adjoint();
    }
    // Round off the asymmetric part of floating-point noise.
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    return DensityMatrix(std::move(rho));
}

double concurrence(const CoefficientMatrix& state) {
    const int d = state.d();
    if (d < 2)
        throw DimensionError("concurrence: undefined for d = 1");
    const Matrix& h = state.entries();
    // tr(rho_A^2) = |H^dag H|_F^2 and tr(rho_B^2) = |H H^dag|_F^2; both are
    // computed and compared as a self-check of the evaluation.
    const double purity_a = (h.adjoint() * h).squaredNorm();
    const double purity_b = (h * h.adjoint()).squaredNorm();
    if (std::abs(purity_a - purity_b) > kResidualTol)
        throw PreconditionError("concurrence: rho_A / rho_B purity mismatch " +
                                std::to_string(std::abs(purity_a - purity_b)));
    const double arg = static_cast<double>(d) / (d - 1) * (1.0 - purity_a);
    return std::sqrt(std::max(0.0, arg));
}

CoefficientMatrix mes(int d) {
    if (d < 1) throw DimensionError("mes: d must be >= 1");
    return CoefficientMatrix(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
}

namespace {

// Appends `v` to the orthonormal columns of `basis` (in place, at column
// `count`) unless its projection residual is below the dependence tolerance.
bool mgs_append(Matrix& basis, Eigen::Index& count, Vector v) {
    project_out(basis, count, v);
    const double norm = v.norm();
    if (norm < kDependentTol) return false;
    basis.col(count++) = v / norm;
    return true;
}

// Picks the complement vector of the orthonormal columns basis.leftCols(k):
// standard seed vectors are tried in index order and the first one whose
// projection residual clears a dimension-aware threshold wins (any seed with
// a nontrivial residual yields the same vector, up to phase, when the
// complement is one-dimensional; the threshold only guards conditioning).
// Falls back to the first seed above the dependence tolerance.
bool seeded_complement(const Matrix& basis, Eigen::Index k, Vector& out) {
    const Eigen::Index d = basis.rows();
    const double healthy = 0.5 / std::sqrt(static_cast<double>(d));
    Eigen::Index fallback = -1;
    double fallback_norm = 0.0;
    for (Eigen::Index s = 0; s < d; ++s) {
        Vector v = Vector::Zero(d);
        v(s) = 1.0;
        project_out(basis, k, v);
        const double norm = v.norm();
        if (norm >= healthy) {
            out = v / norm;
            fix_leading_phase(out);
            return true;
        }
        if (fallback < 0 && norm >= kDependentTol) {
            fallback = s;
            fallback_norm = norm;
        }
    }
    if (fallback < 0) return false;
    Vector v = Vector::Zero(d);
    v(fallback) = 1.0;
    project_out(basis, k, v);
    project_out(basis, k, v);  // extra pass: the residual is small here
    out = v / v.norm();
    fix_leading_phase(out);
    (void)fallback_norm;
    return true;
}

}  // namespace

MeasurementBasis orthonormal_complement_chain(
    int d, const std::vector<std::vector<Vector>>& generators_per_level) {
    if (d < 1) throw DimensionError("orthonormal_complement_chain: d must be >= 1");
    if (static_cast<int>(generators_per_level.size()) != d)
        throw DimensionError("orthonormal_complement_chain: expected one generator set per level");

    Matrix outputs(d, d);
    Matrix work(d, d);  // orthonormalized constraint set of the current level
    for (int m = 0; m < d; ++m) {
        Eigen::Index count = 0;
        for (const Vector& g : generators_per_level[m]) {
            if (g.size() != d)
                throw DimensionError("orthonormal_complement_chain: generator of size " +
                                     std::to_string(g.size()) + " at level " + std::to_string(m));
            if (count < d) mgs_append(work, count, g);
        }
        for (int k = 0; k < m && count < d; ++k) mgs_append(work, count, outputs.col(k));
        Vector v(d);
        if (count >= d || !seeded_complement(work, count, v))
            throw ConstructionError(m, "orthonormal_complement_chain: complement exhausted at level " +
                                           std::to_string(m));
        outputs.col(m) = v;
    }
    return MeasurementBasis(std::move(outputs));
}

namespace {

// Shared fast path for the two constraint bases. The generators arrive in an
// order whose prefixes span the successive constraint spaces; step k projects
// against the first (d-1-k) orthonormalized generators plus all previously
// built outputs, which together stay mutually orthonormal. O(d^3) overall.
Matrix prefix_complement_chain(const Matrix& ordered_generators) {
    const Eigen::Index d = ordered_generators.rows();
    const Eigen::Index n_gen = ordered_generators.cols();  // d - 1

    Matrix gen_basis(d, n_gen);
    std::vector<Eigen::Index> prefix_cols(n_gen + 1, 0);  // generators -> basis columns
    Eigen::Index count = 0;
    for (Eigen::Index j = 0; j < n_gen; ++j) {
        mgs_append(gen_basis, count, ordered_generators.col(j));
        prefix_cols[j + 1] = count;
    }

    Matrix outputs(d, d);
    Matrix work(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        const Eigen::Index gen_prefix = prefix_cols[d - 1 - k];
        work.leftCols(gen_prefix) = gen_basis.leftCols(gen_prefix);
        work.middleCols(gen_prefix, k) = outputs.leftCols(k);
        Vector v(d);
        if (!seeded_complement(work, gen_prefix + k, v))
            throw ConstructionError(static_cast<int>(k),
                                    "constraint chain: complement exhausted at level " +
                                        std::to_string(k));
        outputs.col(k) = v;
    }
    return outputs;
}

}  // namespace

ConstraintMeasurements constraint_measurements(const CoefficientMatrix& state) {
    if (!state.is_upper_triangular())
        throw PreconditionError("constraint_measurements: state is not upper-triangular "
                                "(lower defect " +
                                std::to_string(state.lower_triangular_defect()) + ")");
    const int d = state.d();
    const Matrix& h = state.entries();

    if (d == 1) {
        return {MeasurementBasis::standard(1), MeasurementBasis::standard(1)};
    }

    // A2: u_m must be orthogonal to columns c_n with n > m. Listing the
    // columns as [c_{d-1}, ..., c_1] makes each level's constraint set a
    // prefix, and levels run in outcome order.
    Matrix a2_gens(d, d - 1);
    for (int n = d - 1; n >= 1; --n) a2_gens.col(d - 1 - n) = h.col(n);
    Matrix a2 = prefix_complement_chain(a2_gens);

    // B2: v_n must be orthogonal to conj(r_m) for m < n. The constraint sets
    // grow with n, so the chain is built from outcome d-1 downward with the
    // conjugated rows [r_0, ..., r_{d-2}] as prefix generators, then the
    // output order is reversed back to outcome order.
    Matrix b2_gens(d, d - 1);
    for (int m = 0; m < d - 1; ++m) b2_gens.col(m) = h.row(m).conjugate().transpose();
    const Matrix b2_rev = prefix_complement_chain(b2_gens);
    Matrix b2(d, d);
    for (int k = 0; k < d; ++k) b2.col(d - 1 - k) = b2_rev.col(k);

    return {MeasurementBasis(std::move(a2)), MeasurementBasis(std::move(b2))};
}

}  // namespace hardy
