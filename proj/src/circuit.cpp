/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

#include "revtk/circuit.hpp"

#include "revtk/errors.hpp"

#include <algorithm>
#include <set>

namespace revtk {

std::vector<std::string> circuit::free_input_labels() const {
  std::vector<std::string> labels;
  for (const auto& l : lines_) {
    if (l.in == input_role::named &&
        std::find(labels.begin(), labels.end(), l.in_label) == labels.end()) {
      labels.push_back(l.in_label);
    }
  }
  return labels;
}

std::vector<unsigned> circuit::named_output_lines() const {
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= line_count(); ++i) {
    if (lines_[i - 1].has_output) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<unsigned> circuit::garbage_lines() const {
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= line_count(); ++i) {
    if (!lines_[i - 1].has_output) {
      out.push_back(i);
    }
  }
  return out;
}

void validate(const circuit& c, const gate_library& lib) {
  if (c.line_count() == 0) {
    throw validation_error("circuit " + c.name() + " has no lines");
  }
  for (unsigned i = 1; i <= c.line_count(); ++i) {
    if (c.line(i).in == input_role::unset) {
      throw validation_error("line " + std::to_string(i) + " has no input role");
    }
  }
  // Output labels must be unique; input labels may repeat (a primary input
  // driving several lines).
  std::set<std::string> out_labels;
  for (unsigned i = 1; i <= c.line_count(); ++i) {
    const auto& l = c.line(i);
    if (l.has_output && !out_labels.insert(l.out_label).second) {
      throw validation_error("duplicate output label " + l.out_label + " on line " + std::to_string(i));
    }
  }
  for (std::size_t pos = 0; pos < c.instances().size(); ++pos) {
    const auto& inst = c.instances()[pos];
    const auto* g = lib.find(inst.gate_name);
    if (g == nullptr) {
      throw validation_error("instance " + std::to_string(pos + 1) + ": unknown gate " + inst.gate_name);
    }
    if (inst.lines.size() != g->width()) {
      throw validation_error("instance " + std::to_string(pos + 1) + ": gate " + inst.gate_name +
                             " expects " + std::to_string(g->width()) + " lines, got " +
                             std::to_string(inst.lines.size()));
    }
    std::set<unsigned> seen;
    for (unsigned idx : inst.lines) {
      if (idx < 1 || idx > c.line_count()) {
        throw validation_error("instance " + std::to_string(pos + 1) + ": line " + std::to_string(idx) +
                               " out of range 1.." + std::to_string(c.line_count()));
      }
      if (!seen.insert(idx).second) {
        throw validation_error("instance " + std::to_string(pos + 1) + ": duplicate line " +
                               std::to_string(idx) + " in tuple");
      }
    }
  }
}

bit_vector apply_instances(const circuit& c, const gate_library& lib, bit_vector state) {
  for (const auto& inst : c.instances()) {
    const auto& g = lib.at(inst.gate_name);
    bit_vector local(g.width());
    for (unsigned k = 0; k < g.width(); ++k) {
      local.set_bit(k, state.bit(inst.lines[k] - 1));
    }
    const auto mapped = eval_gate(g, local);
    for (unsigned k = 0; k < g.width(); ++k) {
      state.set_bit(inst.lines[k] - 1, mapped.bit(k));
    }
  }
  return state;
}

namespace {

bit_vector initial_state(const circuit& c, const std::map<std::string, bool>& inputs) {
  bit_vector state(c.line_count());
  for (unsigned i = 1; i <= c.line_count(); ++i) {
    const auto& l = c.line(i);
    switch (l.in) {
    case input_role::named:
      state.set_bit(i - 1, inputs.at(l.in_label));
      break;
    case input_role::const_one:
      state.set_bit(i - 1, true);
      break;
    case input_role::const_zero:
    case input_role::unset:
      break;
    }
  }
  return state;
}

} // namespace

simulation_result simulate(const circuit& c,
                           const gate_library& lib,
                           const std::map<std::string, bool>& inputs) {
  validate(c, lib);
  const auto labels = c.free_input_labels();
  for (const auto& label : labels) {
    if (inputs.find(label) == inputs.end()) {
      throw binding_error("missing input binding for " + label);
    }
  }
  for (const auto& [label, value] : inputs) {
    (void)value;
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
      throw binding_error("unknown input label " + label);
    }
  }

  simulation_result result;
  result.final_state = apply_instances(c, lib, initial_state(c, inputs));
  for (unsigned idx : c.named_output_lines()) {
    result.outputs.emplace_back(c.line(idx).out_label, result.final_state.bit(idx - 1));
  }
  result.garbage = c.garbage_lines();
  return result;
}

truth_table circuit_truth_table(const circuit& c,
                                const gate_library& lib,
                                table_scope scope,
                                unsigned bound) {
  validate(c, lib);
  if (scope == table_scope::all_lines) {
    if (c.line_count() > bound) {
      throw enumeration_limit_error("circuit " + c.name() + " has " + std::to_string(c.line_count()) +
                                    " lines, enumeration bound is " + std::to_string(bound));
    }
    truth_table table(c.line_count(), c.line_count());
    const std::uint64_t rows = std::uint64_t(1) << c.line_count();
    for (std::uint64_t x = 0; x < rows; ++x) {
      const auto state = bit_vector(c.line_count(), static_cast<std::uint32_t>(x));
      table.set(static_cast<std::uint32_t>(x), apply_instances(c, lib, state).code());
    }
    return table;
  }

  const auto labels = c.free_input_labels();
  const auto out_lines = c.named_output_lines();
  const auto in_width = static_cast<unsigned>(labels.size());
  if (in_width > bound) {
    throw enumeration_limit_error("circuit " + c.name() + " has too many free inputs");
  }
  truth_table table(in_width, static_cast<unsigned>(out_lines.size()));
  const std::uint64_t rows = std::uint64_t(1) << in_width;
  for (std::uint64_t x = 0; x < rows; ++x) {
    std::map<std::string, bool> binding;
    for (unsigned i = 0; i < in_width; ++i) {
      binding[labels[i]] = ((x >> i) & 1u) != 0;
    }
    const auto final_state = apply_instances(c, lib, initial_state(c, binding));
    std::uint32_t out = 0;
    for (unsigned k = 0; k < out_lines.size(); ++k) {
      if (final_state.bit(out_lines[k] - 1)) {
        out |= (1u << k);
      }
    }
    table.set(static_cast<std::uint32_t>(x), out);
  }
  return table;
}

circuit canonicalize(const circuit& c) {
  const unsigned n = c.line_count();
  std::vector<unsigned> order; // old indices in new order
  std::vector<bool> used(n + 1, false);
  for (const auto& inst : c.instances()) {
    for (unsigned idx : inst.lines) {
      if (!used[idx]) {
        used[idx] = true;
        order.push_back(idx);
      }
    }
  }
  std::vector<unsigned> untouched;
  for (unsigned i = 1; i <= n; ++i) {
    if (!used[i]) {
      untouched.push_back(i);
    }
  }
  std::sort(untouched.begin(), untouched.end(), [&](unsigned a, unsigned b) {
    const auto& la = c.line(a);
    const auto& lb = c.line(b);
    const auto rank = [](const line_info& l) {
      return l.in == input_role::named ? 0 : (l.in == input_role::const_zero ? 1 : 2);
    };
    if (rank(la) != rank(lb)) {
      return rank(la) < rank(lb);
    }
    if (la.in_label != lb.in_label) {
      return la.in_label < lb.in_label;
    }
    return a < b;
  });
  order.insert(order.end(), untouched.begin(), untouched.end());

  std::vector<unsigned> new_index(n + 1, 0);
  for (unsigned k = 0; k < n; ++k) {
    new_index[order[k]] = k + 1;
  }

  circuit out(c.name(), n);
  for (unsigned i = 1; i <= n; ++i) {
    const auto& l = c.line(i);
    switch (l.in) {
    case input_role::named:
      out.set_input(new_index[i], l.in_label);
      break;
    case input_role::const_zero:
      out.set_const(new_index[i], false);
      break;
    case input_role::const_one:
      out.set_const(new_index[i], true);
      break;
    case input_role::unset:
      break;
    }
    if (l.has_output) {
      out.set_output(new_index[i], l.out_label);
    }
  }
  for (const auto& inst : c.instances()) {
    std::vector<unsigned> mapped;
    mapped.reserve(inst.lines.size());
    for (unsigned idx : inst.lines) {
      mapped.push_back(new_index[idx]);
    }
    out.add_instance(inst.gate_name, std::move(mapped));
  }
  return out;
}

} // namespace revtk
