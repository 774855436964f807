/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file netlist_io.hpp
  \brief Line-oriented netlist text format

  Grammar (UTF-8, `#` starts a comment anywhere on a line):

    circuit <name>
    lines <N>
    line <i> input <LABEL>
    line <i> const <0|1>
    gate <GATENAME> <i1> <i2> ...
    output <i> <LABEL>
    garbage <i>

  `circuit` must come first and `lines` before any line-indexed directive.
  Gate directives execute in listing order.  Lines without an `output`
  directive are garbage outputs; an explicit `garbage` marking is allowed.
  The serializer emits sections in exactly the order above with indices
  ascending, which is the canonical form: serialize(parse(text)) is
  byte-identical for canonical text.
*/

#pragma once

#include "revtk/circuit.hpp"
#include "revtk/gate.hpp"

#include <string>
#include <string_view>

namespace revtk {

//! Parses and validates; throws parse_error (with line/column) or
//! validation_error.
[[nodiscard]] circuit parse_netlist(std::string_view text, const gate_library& lib);

//! Canonical text form.
[[nodiscard]] std::string serialize_netlist(const circuit& c);

} // namespace revtk
