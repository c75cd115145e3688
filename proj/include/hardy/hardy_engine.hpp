#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hardy/qudit_core.hpp"

namespace hardy {

/// The four settings of one experiment: Alice measures A1 or A2, Bob B1 or B2,
/// each with d outcomes.
struct MeasurementScenario {
    MeasurementScenario(MeasurementBasis a1_, MeasurementBasis a2_,
                        MeasurementBasis b1_, MeasurementBasis b2_);

    int d() const { return a1.d(); }

    MeasurementBasis a1;
    MeasurementBasis a2;
    MeasurementBasis b1;
    MeasurementBasis b2;
};

/// Scenario with A1 = B1 = standard and A2/B2 from constraint_measurements.
MeasurementScenario constrained_scenario(const CoefficientMatrix& state);

enum class MeasurementMode { constructed, explicit_bases };

/// Result of one Hardy evaluation: the paradox probability P(A2 < B2), the
/// three zero-constraint residuals, and the state's entanglement degree.
/// Built only through hardy_score / hardy_report (aggregate, no default).
struct HardyReport {
    int d;
    double score;                       // P(A2 < B2)
    std::array<double, 3> residuals;    // P(A2<B1), P(B1<A1), P(A1<B2)
    double concurrence;
    CoefficientMatrix state;
    MeasurementMode mode;

    double max_residual() const;
};

/// One local deterministic outcome assignment; the vertices of the local
/// polytope over which the Bell functional is minimized.
struct DeterministicStrategy {
    int a1 = 0;
    int a2 = 0;
    int b1 = 0;
    int b2 = 0;
};

enum class Party { alice, bob };

/// P(A_i = m, B_j = n) = |u_m^dag H conj(v_n)|^2, evaluated as a bilinear
/// form on the coefficient matrix (the d^2 x d^2 density matrix is never
/// materialized). Throws RangeError for outcome labels >= d and
/// DimensionError on basis/state size mismatch.
double joint_probability(const CoefficientMatrix& state,
                         const MeasurementBasis& basis_a, int outcome_a,
                         const MeasurementBasis& basis_b, int outcome_b);

/// P(first < second): total probability that the first party's outcome label
/// is strictly smaller than the second party's. Exactly one of the two
/// settings must belong to each party; throws UsageError otherwise.
double ordered_probability(const CoefficientMatrix& state,
                           const MeasurementBasis& first_basis, Party first_party,
                           const MeasurementBasis& second_basis, Party second_party);

/// The three constraint values (P(A2<B1), P(B1<A1), P(A1<B2)).
std::array<double, 3> hardy_residuals(const CoefficientMatrix& state,
                                      const MeasurementScenario& scenario);

/// P(A2 < B2) for the scenario.
double hardy_probability(const CoefficientMatrix& state,
                         const MeasurementScenario& scenario);

/// Full report for an upper-triangular state with constructed measurements:
/// A1 = B1 = standard, A2/B2 from constraint_measurements. Deterministic.
HardyReport hardy_score(const CoefficientMatrix& state);

/// Report for explicitly supplied measurements (mode = explicit_bases).
HardyReport hardy_report(const CoefficientMatrix& state,
                         const MeasurementScenario& scenario);

/// Bell functional P(A2<B1) + P(B1<A1) + P(A1<B2) - P(A2<B2); local hidden
/// variable models give values >= 0, the Hardy states give negative values.
double zg_functional(double p_a2_lt_b1, double p_b1_lt_a1, double p_a1_lt_b2,
                     double p_a2_lt_b2);
double zg_functional(const HardyReport& report);

/// Value of the functional on one deterministic strategy (probabilities
/// become 0/1 indicators).
double zg_strategy_value(const DeterministicStrategy& s);

inline constexpr int kLhvDefaultCap = 12;

struct LhvResult {
    int d = 0;
    double minimum = 0.0;
    std::vector<DeterministicStrategy> minimizers;
    std::int64_t strategies_evaluated = 0;
};

/// Brute-force minimum of the functional over all d^4 deterministic
/// strategies, with every minimizer collected. Enumeration is O(d^4); d above
/// `cap` throws ResourceLimitError stating the cap.
LhvResult lhv_minimum(int d, int cap = kLhvDefaultCap);

struct MesNogoReport {
    int d = 0;
    int trials = 0;
    double max_score = 0.0;          // largest P(A2<B2) over all trials
    double max_residual = 0.0;       // largest zero-constraint residual
    double constructed_score = 0.0;  // score of constraint_measurements on MES
    bool pass = false;
};

/// Scenario for the maximally entangled state assembled from three diagonal
/// phase choices and a free unitary u1: the zero constraints then force the
/// remaining bases, and the A2/B2 amplitude matrix collapses to the diagonal
/// product of the phases, so P(A2 < B2) = 0.
MeasurementScenario mes_nogo_scenario(const Eigen::VectorXd& chi1,
                                      const Eigen::VectorXd& chi2,
                                      const Eigen::VectorXd& chi3,
                                      const Matrix& u1);

/// Randomized check that MES admits no Hardy paradox: `trials` random phase
/// triples (and random u1) must all give P(A2 < B2) <= 1e-12, and the
/// constructed measurements on MES must give score <= 1e-12.
MesNogoReport mes_nogo_check(int d, int trials, std::uint64_t seed);

enum class SettingPair { a1b1, a1b2, a2b1, a2b2 };
SettingPair setting_pair_from_label(const std::string& label);  // "11".."22"
std::string setting_pair_label(SettingPair pair);

using CountTable = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Draws n_samples i.i.d. outcome pairs from the exact joint distribution of
/// the chosen setting pair (inverse CDF over the flattened d^2 cells, seeded
/// mt19937_64). counts(m, n) = times Alice got m and Bob got n.
CountTable sample_outcomes(const CoefficientMatrix& state,
                           const MeasurementScenario& scenario,
                           SettingPair pair, std::int64_t n_samples,
                           std::uint64_t seed);

}  // namespace hardy
