/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

#include "revtk/analysis.hpp"

#include "revtk/errors.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace revtk {

namespace {

// Catalog order and print symbols; baselines use the f/fr lettering.
struct letter_entry {
  const char* gate;
  const char* proposed;
  const char* baseline;
};

constexpr std::array<letter_entry, 6> lettering = {{
    {"MUX", "m", "m"},
    {"FEYNMAN", "F", "f"},
    {"FREDKIN", "fr", "fr"},
    {"DOUBLE_FEYNMAN", "D", "D"},
    {"TR", "TR", "TR"},
    {"NOT", "n", "n"},
}};

} // namespace

int symbolic_cost::evaluate(const gate_library& lib) const {
  int total = 0;
  for (const auto& [name, count] : terms) {
    total += count * static_cast<int>(lib.at(name).quantum_cost());
  }
  return total;
}

std::string symbolic_cost::to_string(bool baseline) const {
  std::string out;
  for (const auto& entry : lettering) {
    const auto it = terms.find(entry.gate);
    if (it == terms.end() || it->second == 0) {
      continue;
    }
    const int count = it->second;
    if (!out.empty() && count > 0) {
      out += "+";
    }
    if (count < 0) {
      out += "-";
    }
    out += std::to_string(count < 0 ? -count : count);
    out += baseline ? entry.baseline : entry.proposed;
  }
  return out.empty() ? "0" : out;
}

symbolic_cost operator-(const symbolic_cost& a, const symbolic_cost& b) {
  symbolic_cost delta = a;
  for (const auto& [name, count] : b.terms) {
    delta.terms[name] -= count;
  }
  for (auto it = delta.terms.begin(); it != delta.terms.end();) {
    it = it->second == 0 ? delta.terms.erase(it) : std::next(it);
  }
  return delta;
}

quantum_cost_result quantum_cost(const circuit& c, const gate_library& lib) {
  validate(c, lib);
  quantum_cost_result result;
  for (const auto& inst : c.instances()) {
    result.symbolic.terms[inst.gate_name] += 1;
    result.numeric += lib.at(inst.gate_name).quantum_cost();
  }
  return result;
}

logic_counts total_logical_calculation(const circuit& c, const gate_library& lib) {
  validate(c, lib);
  logic_counts total;
  for (const auto& inst : c.instances()) {
    total += lib.at(inst.gate_name).counts();
  }
  return total;
}

garbage_constants garbage_and_constants(const circuit& c) {
  garbage_constants result;
  for (const auto& l : c.lines()) {
    if (!l.has_output) {
      ++result.garbage;
    }
    if (l.in == input_role::const_zero || l.in == input_role::const_one) {
      ++result.constants;
    }
  }
  return result;
}

equivalence_verdict functional_equivalence(const circuit& c,
                                           const gate_library& lib,
                                           const spec_function& spec,
                                           const std::map<std::string, std::string>& binding) {
  validate(c, lib);
  const auto resolve = [&](const std::string& spec_label) {
    const auto it = binding.find(spec_label);
    return it == binding.end() ? spec_label : it->second;
  };

  const auto circuit_inputs = c.free_input_labels();
  for (const auto& label : spec.input_labels()) {
    const auto bound = resolve(label);
    if (std::find(circuit_inputs.begin(), circuit_inputs.end(), bound) == circuit_inputs.end()) {
      throw binding_error("spec input " + label + " is bound to unknown circuit input " + bound);
    }
  }
  const auto out_lines = c.named_output_lines();
  std::vector<unsigned> bound_out_lines;
  for (const auto& label : spec.output_labels()) {
    const auto bound = resolve(label);
    unsigned found = 0;
    for (unsigned idx : out_lines) {
      if (c.line(idx).out_label == bound) {
        found = idx;
        break;
      }
    }
    if (found == 0) {
      throw binding_error("spec output " + label + " is bound to unknown circuit output " + bound);
    }
    bound_out_lines.push_back(found);
  }

  const unsigned k = static_cast<unsigned>(spec.input_labels().size());
  const std::uint64_t rows = std::uint64_t(1) << k;
  for (std::uint64_t x = 0; x < rows; ++x) {
    std::map<std::string, bool> circuit_binding;
    // Circuit inputs not driven by the spec default to 0.
    for (const auto& label : circuit_inputs) {
      circuit_binding[label] = false;
    }
    std::map<std::string, bool> spec_inputs;
    for (unsigned i = 0; i < k; ++i) {
      const bool value = ((x >> i) & 1u) != 0;
      spec_inputs[spec.input_labels()[i]] = value;
      circuit_binding[resolve(spec.input_labels()[i])] = value;
    }
    const auto sim = simulate(c, lib, circuit_binding);
    const auto expected = spec.eval_code(static_cast<std::uint32_t>(x));
    for (unsigned j = 0; j < spec.output_labels().size(); ++j) {
      const bool circuit_value = sim.final_state.bit(bound_out_lines[j] - 1);
      const bool spec_value = ((expected >> j) & 1u) != 0;
      if (circuit_value != spec_value) {
        return {false,
                equivalence_witness{spec_inputs, spec.output_labels()[j], circuit_value, spec_value}};
      }
    }
  }
  return {true, std::nullopt};
}

parity_report parity_preservation(const circuit& c, const gate_library& lib, unsigned bound) {
  validate(c, lib);
  if (c.line_count() > bound) {
    throw enumeration_limit_error("circuit " + c.name() + " exceeds enumeration bound");
  }

  parity_report report;
  report.strict = true;
  const std::uint64_t all = std::uint64_t(1) << c.line_count();
  for (std::uint64_t x = 0; x < all; ++x) {
    const auto in = bit_vector(c.line_count(), static_cast<std::uint32_t>(x));
    if (in.parity() != apply_instances(c, lib, in).parity()) {
      report.strict = false;
      report.strict_witness = in;
      break;
    }
  }

  const auto labels = c.free_input_labels();
  report.free_inputs = true;
  const std::uint64_t rows = std::uint64_t(1) << labels.size();
  for (std::uint64_t x = 0; x < rows; ++x) {
    std::map<std::string, bool> binding;
    for (unsigned i = 0; i < labels.size(); ++i) {
      binding[labels[i]] = ((x >> i) & 1u) != 0;
    }
    const auto sim = simulate(c, lib, binding);
    bit_vector initial(c.line_count());
    for (unsigned i = 1; i <= c.line_count(); ++i) {
      const auto& l = c.line(i);
      const bool v = l.in == input_role::named ? binding.at(l.in_label) : l.in == input_role::const_one;
      initial.set_bit(i - 1, v);
    }
    if (initial.parity() != sim.final_state.parity()) {
      report.free_inputs = false;
      report.free_witness = binding;
      break;
    }
  }

  // Strict preservation quantifies over a superset of the reachable vectors.
  assert(!report.strict || report.free_inputs);
  return report;
}

metrics_report analyze(const circuit& c, const gate_library& lib, const spec_function* target) {
  metrics_report report;
  report.circuit_name = c.name();
  const auto qc = quantum_cost(c, lib);
  report.quantum_cost_numeric = qc.numeric;
  report.quantum_cost_symbolic = qc.symbolic;
  report.gate_count = static_cast<unsigned>(c.instances().size());
  const auto gc = garbage_and_constants(c);
  report.garbage_outputs = gc.garbage;
  report.constant_inputs = gc.constants;
  report.tlc = total_logical_calculation(c, lib);
  const auto parity = parity_preservation(c, lib);
  report.parity_strict = parity.strict;
  report.parity_free_inputs = parity.free_inputs;
  if (target != nullptr) {
    report.equivalence = functional_equivalence(c, lib, *target).equal;
  }
  return report;
}

} // namespace revtk
