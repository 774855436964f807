/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file search.hpp
  \brief Bounded exhaustive netlist reconstruction

  Enumerates every netlist that uses a gate inventory exactly: gate
  orderings (identical gates symmetry-broken), ordered line tuples per
  gate, input-role assignments within the constant budget, and output
  bindings.  Each complete netlist is screened by exhaustive simulation
  over the free inputs; surviving circuits are canonicalized, deduplicated
  up to line relabeling, and returned in lexicographic order of their
  serialized form.  Results are deterministic for any worker count.
*/

#pragma once

#include "revtk/circuit.hpp"
#include "revtk/spec_function.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revtk {

struct count_range {
  unsigned lo = 0;
  unsigned hi = 0;
};

struct search_constraints {
  //! Exact gate multiset, e.g. {{"MUX", 1}, {"DOUBLE_FEYNMAN", 1}}.
  std::vector<std::pair<std::string, unsigned>> inventory;
  count_range lines;
  count_range const_zero;
  count_range const_one;
  //! Registry name of the target function (used by the file format; the
  //! search API takes the function itself).
  std::string target_name;
  bool require_all_outputs_bound = true;
};

struct search_options {
  std::uint64_t ceiling = 10'000'000;
  unsigned workers = 1;
};

struct search_result {
  //! Canonical candidate circuits, lexicographic by serialized form.
  std::vector<circuit> candidates;
  //! Number of complete netlists screened.
  std::uint64_t explored = 0;
  //! True iff the whole space was covered.
  bool exhausted = false;
};

//! Upper bound on the number of complete netlists the search would screen.
[[nodiscard]] std::uint64_t estimate_search_space(const search_constraints& constraints,
                                                  const spec_function& target,
                                                  const gate_library& lib);

//! Runs the search; throws search_space_error when the estimate exceeds
//! the ceiling.  Zero candidates with exhausted=true means the inventory
//! cannot realize the target within the budgets.
[[nodiscard]] search_result search_netlist(const search_constraints& constraints,
                                           const spec_function& target,
                                           const gate_library& lib,
                                           const search_options& options = {});

//! Parses the line-oriented constraints format:
//!   inventory <GATE> <count>
//!   lines <min> <max>
//!   const0 <min> <max>
//!   const1 <min> <max>
//!   target <SPEC_NAME>
//!   require_all_outputs_bound <0|1>
[[nodiscard]] search_constraints parse_constraints(std::string_view text);

} // namespace revtk
