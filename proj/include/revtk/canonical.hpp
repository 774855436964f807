/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file canonical.hpp
  \brief Bundled adder/subtractor reference circuits

  Four frozen netlists, reconstructed from their published gate
  inventories and I/O constraints and verified exhaustively against
  their reference functions:

    HALF_ADDSUB_R  half adder/subtractor   {2 MUX, 2 FEYNMAN}
    FULL_ADDSUB_R  full adder/subtractor   {2 MUX, 5 FEYNMAN, 1 TR}
    PP_HALF_SUB    half subtractor         {1 MUX, 1 DOUBLE_FEYNMAN}
    PP_FULL_SUB    full subtractor         {1 MUX, 3 DOUBLE_FEYNMAN}
*/

#pragma once

#include "revtk/circuit.hpp"
#include "revtk/spec_function.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace revtk {

//! Provenance note attached to every bundled circuit.
inline constexpr std::string_view canonical_provenance = "reconstructed, functionally verified";

[[nodiscard]] circuit canonical_half_addsub();
[[nodiscard]] circuit canonical_full_addsub();
[[nodiscard]] circuit canonical_pp_half_sub();
[[nodiscard]] circuit canonical_pp_full_sub();

//! Names in report order.
[[nodiscard]] std::vector<std::string> canonical_names();

//! Throws binding_error for unknown names.
[[nodiscard]] circuit canonical_by_name(std::string_view name);

//! The reference function each bundled circuit realizes.
[[nodiscard]] const spec_function& canonical_target(std::string_view name);

} // namespace revtk
