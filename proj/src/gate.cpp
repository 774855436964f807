/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

#include "revtk/gate.hpp"

#include "revtk/errors.hpp"

#include <vector>

namespace revtk {

namespace {

inline bool b(std::uint32_t code, unsigned i) { return ((code >> i) & 1u) != 0; }

inline std::uint32_t pack3(bool p, bool q, bool r) {
  return (p ? 1u : 0u) | (q ? 2u : 0u) | (r ? 4u : 0u);
}

} // namespace

std::uint32_t apply_gate_kind(gate_kind kind, std::uint32_t code) {
  const bool a = b(code, 0);
  const bool y = b(code, 1);
  const bool z = b(code, 2);
  switch (kind) {
  case gate_kind::feynman:
    return (a ? 1u : 0u) | ((a ^ y) ? 2u : 0u);
  case gate_kind::double_feynman:
    return pack3(a, a ^ y, a ^ z);
  case gate_kind::fredkin:
    return pack3(a, a ? z : y, a ? y : z);
  case gate_kind::mux:
    return pack3(a, a ^ y ^ z, (!a && z) ^ (a && y));
  case gate_kind::tr:
    return pack3(a, a ^ y, (a && !y) ^ z);
  case gate_kind::inverter:
    return a ? 0u : 1u;
  case gate_kind::custom:
    break;
  }
  throw toolkit_error("apply_gate_kind: custom gates need an explicit mapping");
}

bit_vector gate::apply(const bit_vector& input) const {
  if (kind_ != gate_kind::custom) {
    return bit_vector(width_, apply_gate_kind(kind_, input.code()));
  }
  return mapping_(input);
}

gate_library::gate_library(unsigned tr_quantum_cost) : tr_quantum_cost_(tr_quantum_cost) {
  gates_.emplace_back("FEYNMAN", 2u, 1u, logic_counts{1, 0, 0},
                      "P = A; Q = A xor B", gate_kind::feynman);
  gates_.emplace_back("DOUBLE_FEYNMAN", 3u, 2u, logic_counts{2, 0, 0},
                      "P = A; Q = A xor B; R = A xor C", gate_kind::double_feynman);
  gates_.emplace_back("FREDKIN", 3u, 5u, logic_counts{4, 4, 2},
                      "P = A; Q = A'B xor AC; R = A'C xor AB", gate_kind::fredkin);
  gates_.emplace_back("MUX", 3u, 4u, logic_counts{3, 2, 1},
                      "P = A; Q = A xor B xor C; R = A'C xor AB", gate_kind::mux);
  gates_.emplace_back("TR", 3u, tr_quantum_cost, logic_counts{2, 1, 1},
                      "P = A; Q = A xor B; R = AB' xor C", gate_kind::tr);
  gates_.emplace_back("NOT", 1u, 1u, logic_counts{0, 0, 1},
                      "P = A'", gate_kind::inverter);
}

const gate* gate_library::find(std::string_view name) const {
  for (const auto& g : gates_) {
    if (g.name() == name) {
      return &g;
    }
  }
  return nullptr;
}

const gate& gate_library::at(std::string_view name) const {
  if (const auto* g = find(name)) {
    return *g;
  }
  throw validation_error("unknown gate: " + std::string(name));
}

bit_vector eval_gate(const gate& g, const bit_vector& input) {
  if (input.width() != g.width()) {
    throw width_mismatch_error("gate " + g.name() + " expects width " + std::to_string(g.width()) +
                               ", got " + std::to_string(input.width()));
  }
  return g.apply(input);
}

truth_table gate_truth_table(const gate& g, unsigned bound) {
  if (g.width() > bound) {
    throw enumeration_limit_error("gate " + g.name() + " is " + std::to_string(g.width()) +
                                  " lines wide, enumeration bound is " + std::to_string(bound));
  }
  truth_table table(g.width(), g.width());
  const std::uint64_t rows = std::uint64_t(1) << g.width();
  for (std::uint64_t x = 0; x < rows; ++x) {
    const auto in = bit_vector(g.width(), static_cast<std::uint32_t>(x));
    table.set(static_cast<std::uint32_t>(x), eval_gate(g, in).code());
  }
  return table;
}

bool is_reversible(const truth_table& table) {
  if (table.in_width() != table.out_width()) {
    return false;
  }
  std::vector<bool> seen(table.row_count(), false);
  for (std::uint64_t x = 0; x < table.row_count(); ++x) {
    const auto out = table.out_code(static_cast<std::uint32_t>(x));
    if (seen[out]) {
      return false;
    }
    seen[out] = true;
  }
  return true;
}

parity_check is_parity_preserving_gate(const gate& g, unsigned bound) {
  if (g.width() > bound) {
    throw enumeration_limit_error("gate " + g.name() + " exceeds enumeration bound");
  }
  const std::uint64_t rows = std::uint64_t(1) << g.width();
  for (std::uint64_t x = 0; x < rows; ++x) {
    const auto in = bit_vector(g.width(), static_cast<std::uint32_t>(x));
    if (in.parity() != eval_gate(g, in).parity()) {
      return {false, in};
    }
  }
  return {true, std::nullopt};
}

} // namespace revtk
