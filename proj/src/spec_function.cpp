/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

#include "revtk/spec_function.hpp"

#include "revtk/errors.hpp"

namespace revtk {

namespace {

inline bool bit(std::uint32_t code, unsigned i) { return ((code >> i) & 1u) != 0; }

inline std::uint32_t pack2(bool first, bool second) {
  return (first ? 1u : 0u) | (second ? 2u : 0u);
}

bool majority(bool a, bool b, bool c) { return (a && b) || (a && c) || (b && c); }

std::uint32_t half_adder(std::uint32_t in) {
  const bool a = bit(in, 0);
  const bool b = bit(in, 1);
  return pack2(a ^ b, a && b);
}

std::uint32_t full_adder(std::uint32_t in) {
  const bool a = bit(in, 0);
  const bool b = bit(in, 1);
  const bool c = bit(in, 2);
  return pack2(a ^ b ^ c, majority(a, b, c));
}

std::uint32_t half_sub(std::uint32_t in) {
  const bool a = bit(in, 0);
  const bool b = bit(in, 1);
  return pack2(a ^ b, !a && b);
}

std::uint32_t full_sub(std::uint32_t in) {
  const bool a = bit(in, 0);
  const bool b = bit(in, 1);
  const bool c = bit(in, 2);
  return pack2(a ^ b ^ c, majority(!a, b, c));
}

std::uint32_t half_addsub(std::uint32_t in) {
  const bool ctrl = bit(in, 2);
  return ctrl ? half_sub(in) : half_adder(in);
}

std::uint32_t full_addsub(std::uint32_t in) {
  const bool ctrl = bit(in, 3);
  return ctrl ? full_sub(in) : full_adder(in);
}

std::uint32_t half_subadd(std::uint32_t in) {
  const bool ctrl = bit(in, 2);
  return ctrl ? half_adder(in) : half_sub(in);
}

std::uint32_t full_subadd(std::uint32_t in) {
  const bool ctrl = bit(in, 3);
  return ctrl ? full_adder(in) : full_sub(in);
}

const std::vector<spec_function>& registry() {
  static const std::vector<spec_function> specs = {
      {"HALF_ADDER", {"A", "B"}, {"Sum", "Carry"}, half_adder},
      {"FULL_ADDER", {"A", "B", "C"}, {"Sum", "Carry"}, full_adder},
      {"HALF_SUB", {"A", "B"}, {"Diff", "Borrow"}, half_sub},
      {"FULL_SUB", {"A", "B", "C"}, {"Diff", "Borr"}, full_sub},
      {"HALF_ADDSUB", {"A", "B", "ctrl"}, {"SD", "CB"}, half_addsub},
      {"FULL_ADDSUB", {"A", "B", "C", "ctrl"}, {"SD", "CB"}, full_addsub},
      {"HALF_SUBADD", {"A", "B", "ctrl"}, {"SD", "CB"}, half_subadd},
      {"FULL_SUBADD", {"A", "B", "C", "ctrl"}, {"SD", "CB"}, full_subadd},
  };
  return specs;
}

} // namespace

const spec_function& spec_function::by_name(std::string_view name) {
  for (const auto& s : registry()) {
    if (s.name() == name) {
      return s;
    }
  }
  throw binding_error("unknown spec function: " + std::string(name));
}

std::vector<std::string> spec_function::names() {
  std::vector<std::string> out;
  for (const auto& s : registry()) {
    out.push_back(s.name());
  }
  return out;
}

} // namespace revtk
