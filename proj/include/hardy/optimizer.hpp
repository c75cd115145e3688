#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hardy/hardy_engine.hpp"

namespace hardy {

/// Search parameters for maximize_hardy. The search space is the unit sphere
/// of real nonnegative upper-triangular d x d matrices (d(d+1)/2 free
/// entries, or the anti-diagonal-symmetric subspace when symmetric = true).
struct OptimizerConfig {
    int d = 2;
    bool symmetric = false;
    int restarts = 10;
    int max_iterations = 20000;        // objective evaluations per restart
    double step_tolerance = 1e-9;      // simplex size at termination
    double score_tolerance = 1e-11;    // objective spread at termination
    std::uint64_t seed = 1;

    void validate() const;
};

struct OptimizeOutcome {
    HardyReport report;
    bool converged;
    int best_restart;
    std::int64_t evaluations;
    double wall_seconds;
};

/// Multi-start Nelder-Mead ascent of hardy_score over the configured space.
/// Restart 0 starts from the approximate state; later restarts perturb it
/// with seeded Gaussian noise. The best report is returned (ties broken by
/// lowest restart index); residuals are construction-guaranteed <= 1e-8.
OptimizeOutcome maximize_hardy(const OptimizerConfig& config);

/// One point of the large-d scan.
struct ScanRow {
    int d = 0;
    double p_app = 0.0;
    double concurrence_app = 0.0;
    double wall_seconds = 0.0;
    std::string error;  // empty on success

    bool ok() const { return error.empty(); }
};

inline constexpr int kScanDefaultCap = 2000;

/// Deterministic evaluation of hardy_score(approx_state(d)) for each d, in
/// input order. Per-d failures are recorded in the row without aborting the
/// scan. `sink`, when set, receives each row as it is produced.
std::vector<ScanRow> scan_approx(
    const std::vector<int>& d_values,
    const std::function<void(const ScanRow&)>& sink = {});

/// Regression tying the optimizer to the tabulated optimal states (d 2..7):
/// scores must agree within 1e-3 and entries within 1e-2.
struct ConsistencyReport {
    int d;
    double optimizer_score;
    double catalog_score;
    double score_gap;
    double max_entry_gap;
    bool consistent;
    Matrix optimizer_state;
    Matrix catalog_state;
};
ConsistencyReport verify_optimum_consistency(int d);
ConsistencyReport verify_optimum_consistency(int d, const OptimizerConfig& base);

}  // namespace hardy
