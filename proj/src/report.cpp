/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

#include "revtk/report.hpp"

#include "revtk/errors.hpp"

#include <sstream>

namespace revtk {

namespace {

struct baseline_entry {
  const char* name;
  symbolic_cost qc;
  logic_counts tlc;
};

const std::vector<baseline_entry>& baselines() {
  static const std::vector<baseline_entry> table = {
      {"HALF_ADDSUB_R", {{{"FEYNMAN", 2}, {"FREDKIN", 2}}}, {6, 8, 4}},
      {"FULL_ADDSUB_R", {{{"FEYNMAN", 5}, {"FREDKIN", 2}, {"TR", 1}}}, {10, 9, 4}},
      {"PP_HALF_SUB", {{{"FREDKIN", 1}, {"DOUBLE_FEYNMAN", 1}}}, {4, 4, 2}},
      {"PP_FULL_SUB", {{{"FREDKIN", 1}, {"DOUBLE_FEYNMAN", 3}}}, {10, 4, 2}},
  };
  return table;
}

const baseline_entry& baseline_for(std::string_view name) {
  for (const auto& entry : baselines()) {
    if (name == entry.name) {
      return entry;
    }
  }
  throw binding_error("no baseline recorded for circuit " + std::string(name));
}

const char* bool_str(bool v) { return v ? "true" : "false"; }

void append_metric_keys(std::ostringstream& out, const metrics_report& r) {
  out << "quantum_cost = " << r.quantum_cost_numeric << "\n";
  out << "quantum_cost_symbolic = " << r.quantum_cost_symbolic.to_string() << "\n";
  out << "gate_count = " << r.gate_count << "\n";
  out << "garbage_outputs = " << r.garbage_outputs << "\n";
  out << "constant_inputs = " << r.constant_inputs << "\n";
  out << "tlc_xor = " << r.tlc.xor_ops << "\n";
  out << "tlc_and = " << r.tlc.and_ops << "\n";
  out << "tlc_not = " << r.tlc.not_ops << "\n";
  out << "parity_strict = " << bool_str(r.parity_strict) << "\n";
  out << "parity_free_inputs = " << bool_str(r.parity_free_inputs) << "\n";
}

} // namespace

symbolic_cost baseline_quantum_cost(std::string_view canonical_name) {
  return baseline_for(canonical_name).qc;
}

logic_counts baseline_tlc(std::string_view canonical_name) {
  return baseline_for(canonical_name).tlc;
}

comparison_report compare_with_baseline(const gate_library& lib) {
  comparison_report report;
  for (const auto& name : canonical_names()) {
    const auto c = canonical_by_name(name);
    const auto& target = canonical_target(name);
    comparison_row row;
    row.proposed = analyze(c, lib, &target);
    const auto& base = baseline_for(name);
    row.baseline_qc = base.qc;
    row.baseline_qc_numeric = base.qc.evaluate(lib);
    row.baseline_tlc = base.tlc;
    row.qc_delta_symbolic = row.proposed.quantum_cost_symbolic - base.qc;
    row.qc_delta = row.qc_delta_symbolic.evaluate(lib);
    row.tlc_delta_xor = static_cast<int>(row.proposed.tlc.xor_ops) - static_cast<int>(base.tlc.xor_ops);
    row.tlc_delta_and = static_cast<int>(row.proposed.tlc.and_ops) - static_cast<int>(base.tlc.and_ops);
    row.tlc_delta_not = static_cast<int>(row.proposed.tlc.not_ops) - static_cast<int>(base.tlc.not_ops);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_metrics_text(const metrics_report& r) {
  std::ostringstream out;
  out << "circuit = " << r.circuit_name << "\n";
  append_metric_keys(out, r);
  if (r.equivalence.has_value()) {
    out << "equivalence = " << bool_str(*r.equivalence) << "\n";
  }
  return out.str();
}

std::string format_metrics_csv(const std::vector<metrics_report>& reports) {
  std::ostringstream out;
  out << "circuit,quantum_cost,quantum_cost_symbolic,gate_count,garbage_outputs,constant_inputs,"
         "tlc_xor,tlc_and,tlc_not,parity_strict,parity_free_inputs,equivalence\n";
  for (const auto& r : reports) {
    out << r.circuit_name << "," << r.quantum_cost_numeric << "," << r.quantum_cost_symbolic.to_string()
        << "," << r.gate_count << "," << r.garbage_outputs << "," << r.constant_inputs << ","
        << r.tlc.xor_ops << "," << r.tlc.and_ops << "," << r.tlc.not_ops << ","
        << bool_str(r.parity_strict) << "," << bool_str(r.parity_free_inputs) << ",";
    if (r.equivalence.has_value()) {
      out << bool_str(*r.equivalence);
    }
    out << "\n";
  }
  return out.str();
}

std::string format_comparison_text(const comparison_report& report) {
  std::ostringstream out;
  bool first = true;
  for (const auto& row : report.rows) {
    if (!first) {
      out << "\n";
    }
    first = false;
    out << "circuit = " << row.proposed.circuit_name << "\n";
    out << "note = " << canonical_provenance << "\n";
    if (row.proposed.equivalence.has_value()) {
      out << "equivalence = " << bool_str(*row.proposed.equivalence) << "\n";
    }
    append_metric_keys(out, row.proposed);
    out << "baseline_quantum_cost = " << row.baseline_qc_numeric << "\n";
    out << "baseline_quantum_cost_symbolic = " << row.baseline_qc.to_string(true) << "\n";
    out << "baseline_tlc_xor = " << row.baseline_tlc.xor_ops << "\n";
    out << "baseline_tlc_and = " << row.baseline_tlc.and_ops << "\n";
    out << "baseline_tlc_not = " << row.baseline_tlc.not_ops << "\n";
    out << "delta_quantum_cost = " << row.qc_delta << "\n";
    out << "delta_quantum_cost_symbolic = " << row.qc_delta_symbolic.to_string() << "\n";
    out << "delta_tlc_xor = " << row.tlc_delta_xor << "\n";
    out << "delta_tlc_and = " << row.tlc_delta_and << "\n";
    out << "delta_tlc_not = " << row.tlc_delta_not << "\n";
  }
  return out.str();
}

std::string format_comparison_csv(const comparison_report& report) {
  std::ostringstream out;
  out << "circuit,quantum_cost,quantum_cost_symbolic,gate_count,garbage_outputs,constant_inputs,"
         "tlc_xor,tlc_and,tlc_not,parity_strict,parity_free_inputs,equivalence,"
         "baseline_quantum_cost,baseline_quantum_cost_symbolic,baseline_tlc_xor,baseline_tlc_and,"
         "baseline_tlc_not,delta_quantum_cost,delta_quantum_cost_symbolic,delta_tlc_xor,"
         "delta_tlc_and,delta_tlc_not\n";
  for (const auto& row : report.rows) {
    const auto& r = row.proposed;
    out << r.circuit_name << "," << r.quantum_cost_numeric << "," << r.quantum_cost_symbolic.to_string()
        << "," << r.gate_count << "," << r.garbage_outputs << "," << r.constant_inputs << ","
        << r.tlc.xor_ops << "," << r.tlc.and_ops << "," << r.tlc.not_ops << ","
        << bool_str(r.parity_strict) << "," << bool_str(r.parity_free_inputs) << ","
        << (r.equivalence.has_value() ? bool_str(*r.equivalence) : "") << ","
        << row.baseline_qc_numeric << "," << row.baseline_qc.to_string(true) << ","
        << row.baseline_tlc.xor_ops << "," << row.baseline_tlc.and_ops << ","
        << row.baseline_tlc.not_ops << "," << row.qc_delta << ","
        << row.qc_delta_symbolic.to_string() << "," << row.tlc_delta_xor << ","
        << row.tlc_delta_and << "," << row.tlc_delta_not << "\n";
  }
  return out.str();
}

} // namespace revtk
