/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

#include "revtk/analysis.hpp"
#include "revtk/canonical.hpp"
#include "revtk/errors.hpp"
#include "revtk/netlist_io.hpp"
#include "revtk/report.hpp"
#include "revtk/search.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw revtk::toolkit_error("cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw revtk::toolkit_error("cannot write " + path);
  }
  out << content;
}

std::map<std::string, bool> parse_bindings(const std::string& spec) {
  std::map<std::string, bool> bindings;
  std::istringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size()) {
      throw revtk::toolkit_error("bad input binding '" + item + "', expected LABEL=0|1");
    }
    const auto value = item.substr(eq + 1);
    if (value != "0" && value != "1") {
      throw revtk::toolkit_error("input " + item.substr(0, eq) + " must be 0 or 1");
    }
    bindings[item.substr(0, eq)] = value == "1";
  }
  return bindings;
}

const char* bool_str(bool v) { return v ? "true" : "false"; }

int run_gates(const revtk::gate_library& lib) {
  for (const auto& g : lib.gates()) {
    const auto parity = revtk::is_parity_preserving_gate(g);
    std::cout << g.name() << " width=" << g.width() << " quantum_cost=" << g.quantum_cost()
              << " logic=" << g.counts().to_string()
              << " parity_preserving=" << bool_str(parity.preserving) << " equations=\""
              << g.equations() << "\"\n";
  }
  return 0;
}

int run_simulate(const revtk::gate_library& lib, const std::string& path, const std::string& inputs) {
  const auto c = revtk::parse_netlist(read_file(path), lib);
  const auto result = revtk::simulate(c, lib, parse_bindings(inputs));
  for (const auto& [label, value] : result.outputs) {
    std::cout << label << " = " << (value ? 1 : 0) << "\n";
  }
  for (unsigned idx : result.garbage) {
    std::cout << "garbage line " << idx << " = " << (result.final_state.bit(idx - 1) ? 1 : 0) << "\n";
  }
  return 0;
}

int run_table(const revtk::gate_library& lib, const std::string& path, const std::string& over) {
  const auto c = revtk::parse_netlist(read_file(path), lib);
  const auto scope = over == "all" ? revtk::table_scope::all_lines : revtk::table_scope::free_inputs;
  const auto table = revtk::circuit_truth_table(c, lib, scope);
  std::cout << "# circuit " << c.name() << "\n";
  if (scope == revtk::table_scope::free_inputs) {
    std::cout << "# inputs:";
    for (const auto& label : c.free_input_labels()) {
      std::cout << " " << label;
    }
    std::cout << "\n# outputs:";
    for (unsigned idx : c.named_output_lines()) {
      std::cout << " " << c.line(idx).out_label;
    }
    std::cout << "\n";
  }
  for (std::uint64_t r = 0; r < table.row_count(); ++r) {
    const auto row = table.display_row(r);
    std::cout << row.in.to_string() << " -> " << row.out.to_string() << "\n";
  }
  return 0;
}

int run_metrics(const revtk::gate_library& lib,
                const std::string& path,
                const std::string& spec_name,
                const std::string& format) {
  const auto c = revtk::parse_netlist(read_file(path), lib);
  const revtk::spec_function* target =
      spec_name.empty() ? nullptr : &revtk::spec_function::by_name(spec_name);
  const auto report = revtk::analyze(c, lib, target);
  if (format == "csv") {
    std::cout << revtk::format_metrics_csv({report});
  } else {
    std::cout << revtk::format_metrics_text(report);
  }
  return 0;
}

int run_verify(const revtk::gate_library& lib, const std::string& path, const std::string& spec_name) {
  const auto c = revtk::parse_netlist(read_file(path), lib);
  const auto& spec = revtk::spec_function::by_name(spec_name);
  const auto verdict = revtk::functional_equivalence(c, lib, spec);
  std::cout << "equivalence = " << bool_str(verdict.equal) << "\n";
  if (!verdict.equal) {
    const auto& w = *verdict.witness;
    std::cout << "witness_input =";
    for (const auto& [label, value] : w.inputs) {
      std::cout << " " << label << "=" << (value ? 1 : 0);
    }
    std::cout << "\n";
    std::cout << "witness_output = " << w.output_label << ": circuit=" << (w.circuit_value ? 1 : 0)
              << " expected=" << (w.spec_value ? 1 : 0) << "\n";
  }
  return verdict.equal ? 0 : 1;
}

int run_parity(const revtk::gate_library& lib, const std::string& path) {
  const auto c = revtk::parse_netlist(read_file(path), lib);
  const auto report = revtk::parity_preservation(c, lib);
  std::cout << "parity_strict = " << bool_str(report.strict) << "\n";
  if (report.strict_witness.has_value()) {
    std::cout << "strict_witness = " << report.strict_witness->to_string() << "\n";
  }
  std::cout << "parity_free_inputs = " << bool_str(report.free_inputs) << "\n";
  if (report.free_witness.has_value()) {
    std::cout << "free_inputs_witness =";
    for (const auto& [label, value] : *report.free_witness) {
      std::cout << " " << label << "=" << (value ? 1 : 0);
    }
    std::cout << "\n";
  }
  return report.strict && report.free_inputs ? 0 : 1;
}

int run_compare(const revtk::gate_library& lib, const std::string& format) {
  const auto report = revtk::compare_with_baseline(lib);
  std::cout << (format == "csv" ? revtk::format_comparison_csv(report)
                                : revtk::format_comparison_text(report));
  return 0;
}

int run_search(const revtk::gate_library& lib,
               const std::string& path,
               const std::string& out_dir,
               std::uint64_t ceiling,
               unsigned workers) {
  const auto constraints = revtk::parse_constraints(read_file(path));
  const auto& target = revtk::spec_function::by_name(constraints.target_name);
  revtk::search_options options;
  options.ceiling = ceiling;
  options.workers = workers;
  const auto result = revtk::search_netlist(constraints, target, lib, options);

  std::ostringstream summary;
  summary << "candidates = " << result.candidates.size() << "\n";
  summary << "explored = " << result.explored << "\n";
  summary << "exhausted = " << bool_str(result.exhausted) << "\n";
  std::cout << summary.str();

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < result.candidates.size(); ++i) {
      std::ostringstream name;
      name << "candidate_" << (i < 100 ? (i < 10 ? "00" : "0") : "") << i << ".nl";
      write_file((std::filesystem::path(out_dir) / name.str()).string(),
                 revtk::serialize_netlist(result.candidates[i]));
    }
    write_file((std::filesystem::path(out_dir) / "summary.txt").string(), summary.str());
  }
  return result.candidates.empty() ? 1 : 0;
}

int run_canon(const std::string& name, const std::string& out_path) {
  const auto c = revtk::canonical_by_name(name);
  const auto text = revtk::serialize_netlist(c);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
    std::cout << "wrote " << out_path << "\n";
    std::cout << "note = " << revtk::canonical_provenance << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"revtk - reversible-logic circuit toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "revtk 0.1.0");
  unsigned tr_cost = revtk::default_tr_quantum_cost;
  app.add_option("--tr-cost", tr_cost, "quantum cost assigned to the TR gate");

  auto* cmd_gates = app.add_subcommand("gates", "print the gate catalog");

  std::string sim_file;
  std::string sim_inputs;
  auto* cmd_sim = app.add_subcommand("simulate", "evaluate a netlist on one input assignment");
  cmd_sim->add_option("file", sim_file, "netlist file")->required();
  cmd_sim->add_option("-i,--inputs", sim_inputs, "comma-separated LABEL=0|1 bindings")->required();

  std::string table_file;
  std::string table_over = "free";
  auto* cmd_table = app.add_subcommand("table", "print a circuit truth table");
  cmd_table->add_option("file", table_file, "netlist file")->required();
  cmd_table->add_option("--over", table_over, "free (default) or all")
      ->check(CLI::IsMember({"free", "all"}));

  std::string metrics_file;
  std::string metrics_spec;
  std::string metrics_format = "text";
  auto* cmd_metrics = app.add_subcommand("metrics", "print the cost metrics of a netlist");
  cmd_metrics->add_option("file", metrics_file, "netlist file")->required();
  cmd_metrics->add_option("--spec", metrics_spec, "also check equivalence against a spec function");
  cmd_metrics->add_option("--format", metrics_format, "text (default) or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  std::string verify_file;
  std::string verify_spec;
  auto* cmd_verify = app.add_subcommand("verify", "check a netlist against a spec function");
  cmd_verify->add_option("file", verify_file, "netlist file")->required();
  cmd_verify->add_option("--spec", verify_spec, "spec function name")->required();

  std::string parity_file;
  auto* cmd_parity = app.add_subcommand("parity", "report parity preservation verdicts");
  cmd_parity->add_option("file", parity_file, "netlist file")->required();

  std::string compare_format = "text";
  auto* cmd_compare = app.add_subcommand("compare", "compare bundled circuits against baselines");
  cmd_compare->add_option("--format", compare_format, "text (default) or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  std::string search_file;
  std::string search_out;
  std::uint64_t search_ceiling = 10'000'000;
  unsigned search_workers = 1;
  auto* cmd_search = app.add_subcommand("search", "reconstruct netlists from a constraints file");
  cmd_search->add_option("file", search_file, "constraints file")->required();
  cmd_search->add_option("-o,--output", search_out, "directory for candidate netlists");
  cmd_search->add_option("--ceiling", search_ceiling, "search space ceiling");
  cmd_search->add_option("-j,--workers", search_workers, "worker threads");

  std::string canon_name;
  std::string canon_out;
  auto* cmd_canon = app.add_subcommand("canon", "write a bundled reference netlist");
  cmd_canon->add_option("name", canon_name, "circuit name (see README)")->required();
  cmd_canon->add_option("-o,--output", canon_out, "output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const revtk::gate_library lib(tr_cost);
    if (*cmd_gates) {
      return run_gates(lib);
    }
    if (*cmd_sim) {
      return run_simulate(lib, sim_file, sim_inputs);
    }
    if (*cmd_table) {
      return run_table(lib, table_file, table_over);
    }
    if (*cmd_metrics) {
      return run_metrics(lib, metrics_file, metrics_spec, metrics_format);
    }
    if (*cmd_verify) {
      return run_verify(lib, verify_file, verify_spec);
    }
    if (*cmd_parity) {
      return run_parity(lib, parity_file);
    }
    if (*cmd_compare) {
      return run_compare(lib, compare_format);
    }
    if (*cmd_search) {
      return run_search(lib, search_file, search_out, search_ceiling, search_workers);
    }
    if (*cmd_canon) {
      return run_canon(canon_name, canon_out);
    }
  } catch (const revtk::toolkit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
