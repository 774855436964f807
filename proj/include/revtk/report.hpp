/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file report.hpp
  \brief Proposed-versus-baseline comparison and report formatting

  Baseline metrics are the published totals of the earlier designs the
  bundled circuits improve on; only their totals are known, so deltas are
  metric-level.  The baseline quantum costs substitute f = 1 (Feynman),
  fr = 5 (Fredkin), D = 2 (Double Feynman) and the configured TR cost.
*/

#pragma once

#include "revtk/analysis.hpp"
#include "revtk/canonical.hpp"

#include <string>
#include <vector>

namespace revtk {

struct comparison_row {
  metrics_report proposed;
  symbolic_cost baseline_qc;
  int baseline_qc_numeric = 0;
  logic_counts baseline_tlc;
  //! proposed - baseline, per gate; coefficients that cancel are dropped.
  symbolic_cost qc_delta_symbolic;
  int qc_delta = 0;
  int tlc_delta_xor = 0;
  int tlc_delta_and = 0;
  int tlc_delta_not = 0;
};

struct comparison_report {
  std::vector<comparison_row> rows;
};

//! Builds the four bundled circuits, analyzes them against their targets
//! and attaches the baseline totals.
[[nodiscard]] comparison_report compare_with_baseline(const gate_library& lib);

//! Baseline totals for one bundled circuit name; throws binding_error.
[[nodiscard]] symbolic_cost baseline_quantum_cost(std::string_view canonical_name);
[[nodiscard]] logic_counts baseline_tlc(std::string_view canonical_name);

// `key = value` text and CSV renderings.  CSV headers keep the fixed key
// order quantum_cost, quantum_cost_symbolic, garbage_outputs,
// constant_inputs, tlc_xor, tlc_and, tlc_not, parity_strict,
// parity_free_inputs, equivalence.
[[nodiscard]] std::string format_metrics_text(const metrics_report& report);
[[nodiscard]] std::string format_metrics_csv(const std::vector<metrics_report>& reports);
[[nodiscard]] std::string format_comparison_text(const comparison_report& report);
[[nodiscard]] std::string format_comparison_csv(const comparison_report& report);

} // namespace revtk
