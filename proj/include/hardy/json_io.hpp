#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hardy/hardy_engine.hpp"
#include "hardy/optimizer.hpp"

namespace hardy {

// State file schema (shared by the library and the CLI):
//   { "d": int, "entries": [[[re, im], ...], ...] }   row-major

nlohmann::json state_to_json(const CoefficientMatrix& state);

/// Re-validates the normalization on load; deviations beyond 1e-9 are
/// rejected, smaller drift is renormalized away.
CoefficientMatrix state_from_json(const nlohmann::json& j);

CoefficientMatrix load_state_file(const std::string& path);
void save_state_file(const CoefficientMatrix& state, const std::string& path);

// HardyReport schema:
//   { "d", "score", "residuals": [r1, r2, r3], "concurrence",
//     "measurement_mode": "constructed" | "explicit", "state"? }
// The state is embedded for d <= `embed_state_max_d` (large scan states are
// exported through the catalog path instead).
nlohmann::json report_to_json(const HardyReport& report, int embed_state_max_d = 64);

nlohmann::json scan_row_to_json(const ScanRow& row);

/// CSV header + row format used by the scan output:
/// `d,p_app,concurrence,wall_time_s` with 9 significant digits.
std::string scan_csv_header();
std::string scan_row_to_csv(const ScanRow& row);

/// Machine-readable error object emitted on the error stream by the CLI.
nlohmann::json error_to_json(const std::string& type, const std::string& message);

/// Matrix block in the 6-decimal fixed style of the reference tables.
void print_matrix_human(std::ostream& os, const Matrix& m);

}  // namespace hardy
