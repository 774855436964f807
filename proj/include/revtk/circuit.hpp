/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file circuit.hpp
  \brief The circuit intermediate representation: lines, gate cascades, I/O roles

  A circuit is a fixed set of numbered lines (1-based) and an ordered list
  of gate instances applied left to right.  Every line has exactly one
  input role (named primary input or a constant) and one output role
  (named primary output or garbage).  Fan-out and feedback do not exist in
  this model; a primary input may drive several lines, which is recorded
  by repeating its label.
*/

#pragma once

#include "revtk/bit_vector.hpp"
#include "revtk/gate.hpp"
#include "revtk/truth_table.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace revtk {

enum class input_role {
  unset,
  named,
  const_zero,
  const_one,
};

struct line_info {
  input_role in = input_role::unset;
  std::string in_label;   // set iff in == named
  bool has_output = false;
  std::string out_label;  // set iff has_output

  friend bool operator==(const line_info&, const line_info&) = default;
};

struct gate_instance {
  std::string gate_name;
  std::vector<unsigned> lines; // 1-based, length = gate width

  friend bool operator==(const gate_instance&, const gate_instance&) = default;
};

class circuit {
public:
  circuit() = default;
  circuit(std::string name, unsigned line_count)
      : name_(std::move(name)), lines_(line_count) {}

  [[nodiscard]] const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  [[nodiscard]] unsigned line_count() const { return static_cast<unsigned>(lines_.size()); }

  [[nodiscard]] const line_info& line(unsigned index) const { return lines_.at(index - 1); }
  [[nodiscard]] const std::vector<line_info>& lines() const { return lines_; }

  void set_input(unsigned index, std::string label) {
    auto& l = lines_.at(index - 1);
    l.in = input_role::named;
    l.in_label = std::move(label);
  }

  void set_const(unsigned index, bool value) {
    auto& l = lines_.at(index - 1);
    l.in = value ? input_role::const_one : input_role::const_zero;
    l.in_label.clear();
  }

  void set_output(unsigned index, std::string label) {
    auto& l = lines_.at(index - 1);
    l.has_output = true;
    l.out_label = std::move(label);
  }

  void add_instance(std::string gate_name, std::vector<unsigned> line_tuple) {
    instances_.push_back({std::move(gate_name), std::move(line_tuple)});
  }

  [[nodiscard]] const std::vector<gate_instance>& instances() const { return instances_; }

  //! Distinct named-input labels, ordered by first line of occurrence.
  [[nodiscard]] std::vector<std::string> free_input_labels() const;

  //! Indices of lines with named outputs, ascending.
  [[nodiscard]] std::vector<unsigned> named_output_lines() const;

  //! Indices of garbage-output lines, ascending.
  [[nodiscard]] std::vector<unsigned> garbage_lines() const;

  friend bool operator==(const circuit&, const circuit&) = default;

private:
  std::string name_;
  std::vector<line_info> lines_;
  std::vector<gate_instance> instances_;
};

//! Checks all structural invariants; throws validation_error on the first
//! violation, naming the offending instance position where applicable.
void validate(const circuit& c, const gate_library& lib);

struct simulation_result {
  //! Named outputs in ascending line order.
  std::vector<std::pair<std::string, bool>> outputs;
  //! Final value of every line.
  bit_vector final_state;
  //! Garbage line indices, ascending.
  std::vector<unsigned> garbage;
};

//! Runs the cascade on one assignment of the named inputs.  The map must
//! bind exactly the circuit's free input labels.
[[nodiscard]] simulation_result simulate(const circuit& c,
                                         const gate_library& lib,
                                         const std::map<std::string, bool>& inputs);

//! Applies every instance to a full line vector (roles ignored).
[[nodiscard]] bit_vector apply_instances(const circuit& c, const gate_library& lib, bit_vector state);

enum class table_scope {
  all_lines,   //!< enumerate all 2^line_count vectors, roles ignored
  free_inputs, //!< enumerate free inputs, constants pinned; outputs = named outputs
};

[[nodiscard]] truth_table circuit_truth_table(const circuit& c,
                                              const gate_library& lib,
                                              table_scope scope,
                                              unsigned bound = default_enumeration_bound);

//! Relabels lines into a normal form: lines ordered by first use in the
//! instance list, then unused lines by role and label.  Two circuits that
//! differ only by line numbering canonicalize identically.
[[nodiscard]] circuit canonicalize(const circuit& c);

} // namespace revtk
