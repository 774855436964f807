/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file logic_counts.hpp
  \brief XOR/AND/NOT operation counts of gate output expressions
*/

#pragma once

#include <string>

namespace revtk {

//! Counts of two-input XOR, two-input AND and NOT operations.
struct logic_counts {
  unsigned xor_ops = 0;
  unsigned and_ops = 0;
  unsigned not_ops = 0;

  friend logic_counts operator+(const logic_counts& a, const logic_counts& b) {
    return {a.xor_ops + b.xor_ops, a.and_ops + b.and_ops, a.not_ops + b.not_ops};
  }

  logic_counts& operator+=(const logic_counts& other) {
    xor_ops += other.xor_ops;
    and_ops += other.and_ops;
    not_ops += other.not_ops;
    return *this;
  }

  friend bool operator==(const logic_counts&, const logic_counts&) = default;

  //! Formats as e.g. "9a+2b+1d" (a = XOR, b = AND, d = NOT).
  [[nodiscard]] std::string to_string() const {
    return std::to_string(xor_ops) + "a+" + std::to_string(and_ops) + "b+" + std::to_string(not_ops) + "d";
  }
};

} // namespace revtk
