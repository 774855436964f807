/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

#include "revtk/search.hpp"

#include "revtk/analysis.hpp"
#include "revtk/errors.hpp"
#include "revtk/netlist_io.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace revtk {

namespace {

using mask_t = std::uint64_t;

unsigned writes_of(gate_kind kind) {
  switch (kind) {
  case gate_kind::feynman:
  case gate_kind::inverter:
    return 1;
  default:
    return 2;
  }
}

//! One line-role assignment: per line, either a target-input index or a
//! constant value.
struct role_assignment {
  struct role {
    bool is_const = false;
    bool const_value = false;
    unsigned input_index = 0;
  };
  unsigned line_count = 0;
  std::vector<role> roles;
};

//! A fixed (line count, role assignment, gate ordering) slice of the space.
struct search_unit {
  role_assignment assignment;
  std::vector<const gate*> gates;
};

struct candidate_entry {
  std::string text;
  circuit c;
  //! spec output label -> circuit output label (identity unless lines are
  //! shared between outputs with coinciding functions).
  std::map<std::string, std::string> binding;
};

void collect_assignments(unsigned line_count,
                         const search_constraints& constraints,
                         const spec_function& target,
                         std::vector<role_assignment>& out) {
  const unsigned k = static_cast<unsigned>(target.input_labels().size());
  if (line_count < k) {
    return;
  }
  const unsigned const_count = line_count - k;

  // Injective placements of the k inputs onto lines, lexicographic.
  std::vector<unsigned> placement(k, 0);
  std::vector<bool> taken(line_count, false);
  const std::function<void(unsigned)> place = [&](unsigned i) {
    if (i == k) {
      std::vector<unsigned> free_lines;
      for (unsigned l = 0; l < line_count; ++l) {
        if (!taken[l]) {
          free_lines.push_back(l);
        }
      }
      // Constant values on the remaining lines, within budget.
      for (std::uint64_t ones = 0; ones < (std::uint64_t(1) << const_count); ++ones) {
        const auto c1 = static_cast<unsigned>(std::popcount(ones));
        const unsigned c0 = const_count - c1;
        if (c0 < constraints.const_zero.lo || c0 > constraints.const_zero.hi ||
            c1 < constraints.const_one.lo || c1 > constraints.const_one.hi) {
          continue;
        }
        role_assignment a;
        a.line_count = line_count;
        a.roles.resize(line_count);
        for (unsigned j = 0; j < k; ++j) {
          a.roles[placement[j]] = {false, false, j};
        }
        for (unsigned j = 0; j < const_count; ++j) {
          a.roles[free_lines[j]] = {true, ((ones >> j) & 1u) != 0, 0};
        }
        out.push_back(std::move(a));
      }
      return;
    }
    for (unsigned l = 0; l < line_count; ++l) {
      if (!taken[l]) {
        taken[l] = true;
        placement[i] = l;
        place(i + 1);
        taken[l] = false;
      }
    }
  };
  place(0);
}

std::vector<std::vector<const gate*>> gate_orderings(const search_constraints& constraints,
                                                     const gate_library& lib) {
  std::vector<std::string> names;
  for (const auto& [name, count] : constraints.inventory) {
    (void)lib.at(name); // resolve early so unknown gates fail fast
    for (unsigned i = 0; i < count; ++i) {
      names.push_back(name);
    }
  }
  std::sort(names.begin(), names.end());
  std::vector<std::vector<const gate*>> orderings;
  do {
    std::vector<const gate*> gates;
    gates.reserve(names.size());
    for (const auto& name : names) {
      gates.push_back(&lib.at(name));
    }
    orderings.push_back(std::move(gates));
  } while (std::next_permutation(names.begin(), names.end()));
  return orderings;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::uint64_t ordered_tuples(unsigned lines, unsigned width) {
  if (width > lines) {
    return 0;
  }
  std::uint64_t n = 1;
  for (unsigned i = 0; i < width; ++i) {
    n = saturating_mul(n, lines - i);
  }
  return n;
}

struct mask_evaluator {
  unsigned free_inputs = 0;
  mask_t valid = 0;

  explicit mask_evaluator(unsigned k) : free_inputs(k) {
    valid = k >= 6 ? ~mask_t(0) : ((mask_t(1) << (1u << k)) - 1);
  }

  [[nodiscard]] mask_t variable(unsigned i) const {
    mask_t m = 0;
    for (mask_t x = 0; x < (mask_t(1) << free_inputs); ++x) {
      if ((x >> i) & 1u) {
        m |= mask_t(1) << x;
      }
    }
    return m;
  }

  void apply(gate_kind kind, const std::vector<unsigned>& tuple, std::vector<mask_t>& m) const {
    switch (kind) {
    case gate_kind::feynman:
      m[tuple[1]] ^= m[tuple[0]];
      return;
    case gate_kind::double_feynman:
      m[tuple[1]] ^= m[tuple[0]];
      m[tuple[2]] ^= m[tuple[0]];
      return;
    case gate_kind::fredkin: {
      const mask_t a = m[tuple[0]];
      const mask_t y = m[tuple[1]];
      const mask_t z = m[tuple[2]];
      m[tuple[1]] = ((~a & y) | (a & z)) & valid;
      m[tuple[2]] = ((~a & z) | (a & y)) & valid;
      return;
    }
    case gate_kind::mux: {
      const mask_t a = m[tuple[0]];
      const mask_t y = m[tuple[1]];
      const mask_t z = m[tuple[2]];
      m[tuple[1]] = a ^ y ^ z;
      m[tuple[2]] = ((~a & z) ^ (a & y)) & valid;
      return;
    }
    case gate_kind::tr: {
      const mask_t a = m[tuple[0]];
      const mask_t y = m[tuple[1]];
      m[tuple[1]] = a ^ y;
      m[tuple[2]] = ((a & ~y) & valid) ^ m[tuple[2]];
      return;
    }
    case gate_kind::inverter:
      m[tuple[0]] = ~m[tuple[0]] & valid;
      return;
    case gate_kind::custom:
      break;
    }
    throw toolkit_error("search does not support custom gates");
  }
};

struct unit_runner {
  const search_unit& unit;
  const spec_function& target;
  const search_constraints& constraints;
  const mask_evaluator& eval;
  const std::vector<mask_t>& output_masks;

  std::vector<candidate_entry> found;
  std::uint64_t explored = 0;

  std::vector<mask_t> masks;
  std::vector<std::vector<unsigned>> tuples;
  std::vector<unsigned> writes_after; // writes of gates at positions > d

  void run() {
    const unsigned n = unit.assignment.line_count;
    masks.assign(n, 0);
    for (unsigned l = 0; l < n; ++l) {
      const auto& role = unit.assignment.roles[l];
      masks[l] = role.is_const ? (role.const_value ? eval.valid : 0) : eval.variable(role.input_index);
    }
    tuples.assign(unit.gates.size(), {});
    writes_after.assign(unit.gates.size() + 1, 0);
    for (std::size_t d = unit.gates.size(); d-- > 0;) {
      writes_after[d] = writes_after[d + 1] + writes_of(unit.gates[d]->kind());
    }
    if (unit.gates.empty() || !pruned(0)) {
      descend(0);
    }
  }

  //! True when the remaining gates cannot possibly supply the target
  //! functions still missing from the lines (each gate writes <= 2 lines).
  [[nodiscard]] bool pruned(std::size_t depth) const {
    unsigned missing = 0;
    for (std::size_t j = 0; j < output_masks.size(); ++j) {
      // Outputs sharing a target mask need that many distinct lines; count
      // each distinct mask once.
      bool first_of_kind = true;
      for (std::size_t j2 = 0; j2 < j; ++j2) {
        if (output_masks[j2] == output_masks[j]) {
          first_of_kind = false;
          break;
        }
      }
      if (!first_of_kind) {
        continue;
      }
      unsigned need = 0;
      for (std::size_t j2 = j; j2 < output_masks.size(); ++j2) {
        if (output_masks[j2] == output_masks[j]) {
          ++need;
        }
      }
      if (!constraints.require_all_outputs_bound) {
        need = 1;
      }
      unsigned have = 0;
      for (const mask_t m : masks) {
        if (m == output_masks[j]) {
          ++have;
        }
      }
      missing += need > have ? need - have : 0;
    }
    return missing > writes_after[depth];
  }

  void descend(std::size_t depth) {
    if (depth == unit.gates.size()) {
      ++explored;
      emit_candidates();
      return;
    }
    const auto& g = *unit.gates[depth];
    const unsigned n = unit.assignment.line_count;
    std::vector<unsigned>& tuple = tuples[depth];
    tuple.assign(g.width(), 0);
    std::vector<bool> taken(n, false);
    const std::function<void(unsigned)> choose = [&](unsigned pos) {
      if (pos == g.width()) {
        const auto saved = masks;
        eval.apply(g.kind(), tuple, masks);
        // Complete netlists always reach the leaf so they count as
        // explored; the prune only cuts proper prefixes.
        if (depth + 1 == unit.gates.size() || !pruned(depth + 1)) {
          descend(depth + 1);
        }
        masks = saved;
        return;
      }
      for (unsigned l = 0; l < n; ++l) {
        if (!taken[l]) {
          taken[l] = true;
          tuple[pos] = l;
          choose(pos + 1);
          taken[l] = false;
        }
      }
    };
    choose(0);
  }

  void emit_candidates() {
    const auto m = output_masks.size();
    std::vector<unsigned> chosen(m, 0);
    std::vector<bool> line_taken(unit.assignment.line_count, false);
    const std::function<void(std::size_t)> bind = [&](std::size_t j) {
      if (j == m) {
        emit_one(chosen);
        return;
      }
      for (unsigned l = 0; l < unit.assignment.line_count; ++l) {
        if (masks[l] != output_masks[j]) {
          continue;
        }
        // Sharing a line between outputs with coinciding functions is only
        // allowed when complete distinct bindings are not required.
        if (line_taken[l] && constraints.require_all_outputs_bound) {
          continue;
        }
        const bool was_taken = line_taken[l];
        line_taken[l] = true;
        chosen[j] = l;
        bind(j + 1);
        line_taken[l] = was_taken;
      }
    };
    bind(0);
  }

  void emit_one(const std::vector<unsigned>& output_lines) {
    const unsigned n = unit.assignment.line_count;
    circuit c("candidate", n);
    for (unsigned l = 0; l < n; ++l) {
      const auto& role = unit.assignment.roles[l];
      if (role.is_const) {
        c.set_const(l + 1, role.const_value);
      } else {
        c.set_input(l + 1, target.input_labels()[role.input_index]);
      }
    }
    for (std::size_t d = 0; d < unit.gates.size(); ++d) {
      std::vector<unsigned> tuple;
      tuple.reserve(tuples[d].size());
      for (unsigned l : tuples[d]) {
        tuple.push_back(l + 1);
      }
      c.add_instance(unit.gates[d]->name(), std::move(tuple));
    }
    std::map<std::string, std::string> binding;
    for (std::size_t j = 0; j < output_lines.size(); ++j) {
      const auto& label = target.output_labels()[j];
      if (!c.line(output_lines[j] + 1).has_output) {
        c.set_output(output_lines[j] + 1, label);
      }
      binding[label] = c.line(output_lines[j] + 1).out_label;
    }
    auto canon = canonicalize(c);
    auto text = serialize_netlist(canon);
    found.push_back({std::move(text), std::move(canon), std::move(binding)});
  }
};

std::vector<search_unit> build_units(const search_constraints& constraints,
                                     const spec_function& target,
                                     const gate_library& lib) {
  std::vector<search_unit> units;
  const auto orderings = gate_orderings(constraints, lib);
  for (unsigned n = constraints.lines.lo; n <= constraints.lines.hi; ++n) {
    if (n == 0 || n > 16) {
      continue;
    }
    std::vector<role_assignment> assignments;
    collect_assignments(n, constraints, target, assignments);
    for (const auto& a : assignments) {
      for (const auto& ordering : orderings) {
        units.push_back({a, ordering});
      }
    }
  }
  return units;
}

} // namespace

std::uint64_t estimate_search_space(const search_constraints& constraints,
                                    const spec_function& target,
                                    const gate_library& lib) {
  std::uint64_t total = 0;
  for (const auto& unit : build_units(constraints, target, lib)) {
    std::uint64_t leaves = 1;
    for (const auto* g : unit.gates) {
      leaves = saturating_mul(leaves, ordered_tuples(unit.assignment.line_count, g->width()));
    }
    total = saturating_add(total, leaves);
  }
  return total;
}

search_result search_netlist(const search_constraints& constraints,
                             const spec_function& target,
                             const gate_library& lib,
                             const search_options& options) {
  if (target.input_labels().size() > 6) {
    throw search_space_error("target has more than 6 inputs");
  }
  const auto estimate = estimate_search_space(constraints, target, lib);
  if (estimate > options.ceiling) {
    throw search_space_error("estimated search space " + std::to_string(estimate) +
                             " exceeds ceiling " + std::to_string(options.ceiling) +
                             "; tighten the budgets");
  }

  const auto units = build_units(constraints, target, lib);
  const mask_evaluator eval(static_cast<unsigned>(target.input_labels().size()));
  std::vector<mask_t> output_masks;
  for (std::size_t j = 0; j < target.output_labels().size(); ++j) {
    mask_t m = 0;
    for (mask_t x = 0; x < (mask_t(1) << target.input_labels().size()); ++x) {
      if ((target.eval_code(static_cast<std::uint32_t>(x)) >> j) & 1u) {
        m |= mask_t(1) << x;
      }
    }
    output_masks.push_back(m);
  }

  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::vector<candidate_entry>> found_per_unit(units.size());
  std::vector<std::uint64_t> explored_per_unit(units.size(), 0);

  const auto work = [&](unsigned w) {
    for (std::size_t u = w; u < units.size(); u += workers) {
      unit_runner runner{units[u], target, constraints, eval, output_masks, {}, 0, {}, {}, {}};
      runner.run();
      found_per_unit[u] = std::move(runner.found);
      explored_per_unit[u] = runner.explored;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back(work, w);
    }
    for (auto& t : threads) {
      t.join();
    }
  }

  search_result result;
  result.exhausted = true;
  std::set<std::string> seen;
  std::vector<candidate_entry> unique;
  for (std::size_t u = 0; u < units.size(); ++u) {
    result.explored += explored_per_unit[u];
    for (auto& entry : found_per_unit[u]) {
      if (seen.insert(entry.text).second) {
        unique.push_back(std::move(entry));
      }
    }
  }
  std::sort(unique.begin(), unique.end(),
            [](const auto& a, const auto& b) { return a.text < b.text; });

  // Candidates screened with the mask evaluator must re-verify under the
  // independent per-vector simulator.
  for (auto& entry : unique) {
    const auto verdict = functional_equivalence(entry.c, lib, target, entry.binding);
    if (!verdict.equal) {
      throw toolkit_error("search screening and simulation disagree on a candidate");
    }
    result.candidates.push_back(std::move(entry.c));
  }
  return result;
}

search_constraints parse_constraints(std::string_view text) {
  search_constraints constraints;
  bool have_lines = false;
  std::istringstream stream{std::string(text)};
  std::string raw;
  unsigned line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) {
      continue;
    }
    const auto expect_range = [&](count_range& r) {
      if (!(ls >> r.lo >> r.hi) || r.lo > r.hi) {
        throw parse_error("expected '<min> <max>' after '" + head + "'", line_no, 1);
      }
    };
    if (head == "inventory") {
      std::string name;
      unsigned count = 0;
      if (!(ls >> name >> count)) {
        throw parse_error("expected 'inventory <GATE> <count>'", line_no, 1);
      }
      constraints.inventory.emplace_back(name, count);
    } else if (head == "lines") {
      expect_range(constraints.lines);
      have_lines = true;
    } else if (head == "const0") {
      expect_range(constraints.const_zero);
    } else if (head == "const1") {
      expect_range(constraints.const_one);
    } else if (head == "target") {
      if (!(ls >> constraints.target_name)) {
        throw parse_error("expected 'target <SPEC_NAME>'", line_no, 1);
      }
    } else if (head == "require_all_outputs_bound") {
      unsigned v = 1;
      if (!(ls >> v) || v > 1) {
        throw parse_error("expected 'require_all_outputs_bound <0|1>'", line_no, 1);
      }
      constraints.require_all_outputs_bound = v == 1;
    } else {
      throw parse_error("unknown directive '" + head + "'", line_no, 1);
    }
  }
  if (!have_lines) {
    throw parse_error("missing 'lines' directive", line_no == 0 ? 1 : line_no, 1);
  }
  if (constraints.target_name.empty()) {
    throw parse_error("missing 'target' directive", line_no, 1);
  }
  return constraints;
}

} // namespace revtk
