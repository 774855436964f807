/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file gate.hpp
  \brief Reversible gates and the built-in gate catalog

  The catalog covers the classic small reversible gates: FEYNMAN (CNOT),
  DOUBLE_FEYNMAN (F2G), FREDKIN, MUX (MG), TR and NOT.  Every gate is an
  n-to-n bijection over bit-vectors and carries a quantum cost plus the
  XOR/AND/NOT counts of its output expressions.
*/

#pragma once

#include "revtk/bit_vector.hpp"
#include "revtk/logic_counts.hpp"
#include "revtk/truth_table.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revtk {

//! Default number of lines below which exhaustive enumeration is allowed.
inline constexpr unsigned default_enumeration_bound = 20;

//! Default quantum cost assigned to the TR gate (overridable per library).
inline constexpr unsigned default_tr_quantum_cost = 4;

enum class gate_kind {
  feynman,
  double_feynman,
  fredkin,
  mux,
  tr,
  inverter,
  custom,
};

class gate {
public:
  gate(std::string name,
       unsigned width,
       unsigned quantum_cost,
       logic_counts counts,
       std::string equations,
       gate_kind kind,
       std::function<bit_vector(const bit_vector&)> mapping = {})
      : name_(std::move(name)),
        width_(width),
        quantum_cost_(quantum_cost),
        counts_(counts),
        equations_(std::move(equations)),
        kind_(kind),
        mapping_(std::move(mapping)) {}

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] unsigned width() const { return width_; }
  [[nodiscard]] unsigned quantum_cost() const { return quantum_cost_; }
  [[nodiscard]] const logic_counts& counts() const { return counts_; }
  [[nodiscard]] const std::string& equations() const { return equations_; }
  [[nodiscard]] gate_kind kind() const { return kind_; }

  //! Applies the mapping without a width check (see eval_gate).
  [[nodiscard]] bit_vector apply(const bit_vector& input) const;

private:
  std::string name_;
  unsigned width_;
  unsigned quantum_cost_;
  logic_counts counts_;
  std::string equations_;
  gate_kind kind_;
  std::function<bit_vector(const bit_vector&)> mapping_;
};

//! Applies a built-in gate kind to a packed code (bit 0 = first line).
[[nodiscard]] std::uint32_t apply_gate_kind(gate_kind kind, std::uint32_t code);

//! The fixed catalog of built-in gates.
class gate_library {
public:
  explicit gate_library(unsigned tr_quantum_cost = default_tr_quantum_cost);

  [[nodiscard]] const gate* find(std::string_view name) const;

  //! Like find but throws validation_error for unknown names.
  [[nodiscard]] const gate& at(std::string_view name) const;

  [[nodiscard]] const std::vector<gate>& gates() const { return gates_; }

  [[nodiscard]] unsigned tr_quantum_cost() const { return tr_quantum_cost_; }

private:
  std::vector<gate> gates_;
  unsigned tr_quantum_cost_;
};

//! Evaluates a gate on an input vector; throws width_mismatch_error.
[[nodiscard]] bit_vector eval_gate(const gate& g, const bit_vector& input);

//! Materializes all 2^width rows; throws enumeration_limit_error above bound.
[[nodiscard]] truth_table gate_truth_table(const gate& g, unsigned bound = default_enumeration_bound);

struct parity_check {
  bool preserving = false;
  //! Least-code input whose output parity differs, when not preserving.
  std::optional<bit_vector> witness;
};

//! Exhaustively checks that every input's parity equals its output's.
[[nodiscard]] parity_check is_parity_preserving_gate(const gate& g,
                                                     unsigned bound = default_enumeration_bound);

} // namespace revtk
