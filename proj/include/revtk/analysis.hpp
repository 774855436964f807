/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file analysis.hpp
  \brief Circuit cost metrics, equivalence checking and parity analysis

  Quantum cost is carried both numerically and symbolically as a gate
  multiset, so results stay readable when a gate's catalog cost (TR in
  particular) is reconfigured.
*/

#pragma once

#include "revtk/circuit.hpp"
#include "revtk/logic_counts.hpp"
#include "revtk/spec_function.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace revtk {

//! A signed gate multiset, e.g. {MUX: 2, FEYNMAN: -2}.
struct symbolic_cost {
  std::map<std::string, int> terms;

  //! Substitutes catalog costs for gate names.
  [[nodiscard]] int evaluate(const gate_library& lib) const;

  //! Formats with one-letter symbols in catalog order, e.g. "2m+5F+1TR".
  //! `baseline` switches Feynman/Fredkin to the f/fr lettering used for
  //! prior designs.
  [[nodiscard]] std::string to_string(bool baseline = false) const;

  friend symbolic_cost operator-(const symbolic_cost& a, const symbolic_cost& b);
  friend bool operator==(const symbolic_cost&, const symbolic_cost&) = default;
};

//! Numeric and symbolic quantum cost of a circuit.
struct quantum_cost_result {
  unsigned numeric = 0;
  symbolic_cost symbolic;
};

[[nodiscard]] quantum_cost_result quantum_cost(const circuit& c, const gate_library& lib);

//! Componentwise sum of per-gate XOR/AND/NOT counts.
[[nodiscard]] logic_counts total_logical_calculation(const circuit& c, const gate_library& lib);

struct garbage_constants {
  unsigned garbage = 0;
  unsigned constants = 0;

  friend bool operator==(const garbage_constants&, const garbage_constants&) = default;
};

[[nodiscard]] garbage_constants garbage_and_constants(const circuit& c);

struct equivalence_witness {
  std::map<std::string, bool> inputs; // spec input label -> value
  std::string output_label;           // spec output label that differs
  bool circuit_value = false;
  bool spec_value = false;
};

struct equivalence_verdict {
  bool equal = false;
  std::optional<equivalence_witness> witness;
};

//! Exhaustively compares a circuit against a reference function.  The
//! binding maps spec labels to circuit labels; unbound spec labels default
//! to their own name.  Throws binding_error when a label cannot be
//! resolved.
[[nodiscard]] equivalence_verdict functional_equivalence(
    const circuit& c,
    const gate_library& lib,
    const spec_function& spec,
    const std::map<std::string, std::string>& binding = {});

struct parity_report {
  bool strict = false;
  std::optional<bit_vector> strict_witness;       // full line vector
  bool free_inputs = false;
  std::optional<std::map<std::string, bool>> free_witness;
};

//! strict: parity equality over all line vectors; free_inputs: over the
//! reachable vectors with constants pinned.
[[nodiscard]] parity_report parity_preservation(const circuit& c,
                                                const gate_library& lib,
                                                unsigned bound = default_enumeration_bound);

//! Everything the `metrics` report carries for one circuit.
struct metrics_report {
  std::string circuit_name;
  unsigned quantum_cost_numeric = 0;
  symbolic_cost quantum_cost_symbolic;
  unsigned gate_count = 0;
  unsigned garbage_outputs = 0;
  unsigned constant_inputs = 0;
  logic_counts tlc;
  bool parity_strict = false;
  bool parity_free_inputs = false;
  std::optional<bool> equivalence;
};

[[nodiscard]] metrics_report analyze(const circuit& c,
                                     const gate_library& lib,
                                     const spec_function* target = nullptr);

} // namespace revtk
