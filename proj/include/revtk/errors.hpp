/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file errors.hpp
  \brief Exception types thrown by the toolkit
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace revtk {

//! Base class for all toolkit errors.
struct toolkit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! A gate was applied to a vector of the wrong width.
struct width_mismatch_error : toolkit_error {
  using toolkit_error::toolkit_error;
};

//! An exhaustive enumeration would exceed the configured line bound.
struct enumeration_limit_error : toolkit_error {
  using toolkit_error::toolkit_error;
};

//! A circuit violates a structural invariant (unknown gate, bad index, ...).
struct validation_error : toolkit_error {
  using toolkit_error::toolkit_error;
};

//! Netlist text could not be parsed; carries 1-based line and column.
struct parse_error : toolkit_error {
  parse_error(const std::string& msg, unsigned line, unsigned column)
      : toolkit_error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line(line),
        column(column) {}

  unsigned line;
  unsigned column;
};

//! An input/output label binding is missing, duplicated, or unknown.
struct binding_error : toolkit_error {
  using toolkit_error::toolkit_error;
};

//! The estimated search space exceeds the configured ceiling.
struct search_space_error : toolkit_error {
  using toolkit_error::toolkit_error;
};

} // namespace revtk
