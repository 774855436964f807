/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "revtk/canonical.hpp"
#include "revtk/circuit.hpp"
#include "revtk/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace revtk;

namespace {

const gate_library lib;

circuit three_line_mux() {
  circuit c("t", 3);
  c.set_input(1, "A");
  c.set_const(2, false);
  c.set_input(3, "B");
  c.add_instance("MUX", {1, 3, 2});
  return c;
}

} // namespace

TEST_CASE("validate accepts a well-formed circuit") {
  CHECK_NOTHROW(validate(three_line_mux(), lib));
}

TEST_CASE("validate rejects duplicate lines in a tuple") {
  circuit c("t", 2);
  c.set_input(1, "A");
  c.set_input(2, "B");
  c.add_instance("FEYNMAN", {2, 2});
  CHECK_THROWS_WITH_AS(validate(c, lib), doctest::Contains("duplicate line"), validation_error);
}

TEST_CASE("validate rejects unknown gates") {
  circuit c("t", 2);
  c.set_input(1, "A");
  c.set_input(2, "B");
  c.add_instance("XYZ", {1, 2});
  CHECK_THROWS_WITH_AS(validate(c, lib), doctest::Contains("XYZ"), validation_error);
}

TEST_CASE("validate rejects out-of-range line indices") {
  circuit c("t", 2);
  c.set_input(1, "A");
  c.set_input(2, "B");
  c.add_instance("FEYNMAN", {1, 9});
  CHECK_THROWS_WITH_AS(validate(c, lib), doctest::Contains("out of range"), validation_error);
}

TEST_CASE("validate rejects duplicate output labels and missing roles") {
  circuit c("t", 2);
  c.set_input(1, "A");
  c.set_output(1, "X");
  c.set_output(2, "X");
  CHECK_THROWS_WITH_AS(validate(c, lib), doctest::Contains("input role"), validation_error);
  c.set_input(2, "B");
  CHECK_THROWS_WITH_AS(validate(c, lib), doctest::Contains("duplicate output label"), validation_error);
}

TEST_CASE("duplicate input labels are allowed") {
  circuit c("t", 2);
  c.set_input(1, "A");
  c.set_input(2, "A");
  CHECK_NOTHROW(validate(c, lib));
  CHECK(c.free_input_labels() == std::vector<std::string>{"A"});
  const auto sim = simulate(c, lib, {{"A", true}});
  CHECK(sim.final_state == bit_vector::of({1, 1}));
}

TEST_CASE("simulate the half subtractor") {
  const auto c = canonical_pp_half_sub();

  auto sim = simulate(c, lib, {{"A", true}, {"B", true}});
  REQUIRE(sim.outputs.size() == 2);
  CHECK(sim.outputs[0] == std::pair<std::string, bool>{"Diff", false});
  CHECK(sim.outputs[1] == std::pair<std::string, bool>{"Borrow", false});

  sim = simulate(c, lib, {{"A", false}, {"B", true}});
  CHECK(sim.outputs[0] == std::pair<std::string, bool>{"Diff", true});
  CHECK(sim.outputs[1] == std::pair<std::string, bool>{"Borrow", true});
  CHECK(sim.garbage == std::vector<unsigned>{2, 4});
}

TEST_CASE("simulate with no instances is the identity") {
  circuit c("id", 2);
  c.set_input(1, "X");
  c.set_input(2, "Y");
  c.set_output(1, "P");
  c.set_output(2, "Q");
  const auto sim = simulate(c, lib, {{"X", true}, {"Y", false}});
  CHECK(sim.outputs[0].second == true);
  CHECK(sim.outputs[1].second == false);
}

TEST_CASE("simulate rejects missing and extra bindings") {
  const auto c = canonical_pp_half_sub();
  CHECK_THROWS_AS(static_cast<void>(simulate(c, lib, {{"A", true}})), binding_error);
  CHECK_THROWS_AS(static_cast<void>(simulate(c, lib, {{"A", true}, {"B", false}, {"Z", true}})),
                  binding_error);
}

TEST_CASE("free-input table of the full subtractor matches its equations") {
  const auto c = canonical_pp_full_sub();
  const auto table = circuit_truth_table(c, lib, table_scope::free_inputs);
  REQUIRE(table.in_width() == 3);
  REQUIRE(table.row_count() == 8);
  // Output order follows named-output line order: Borr (line 3), Diff (line 4).
  for (unsigned x = 0; x < 8; ++x) {
    const bool a = (x & 1) != 0;
    const bool b = (x & 2) != 0;
    const bool cc = (x & 4) != 0;
    const bool diff = a ^ b ^ cc;
    const bool borr = (!a && b) ^ (!a && cc) ^ (b && cc);
    CHECK(table.output(x) == bit_vector::of({borr, diff}));
  }
}

TEST_CASE("all-lines table of an empty circuit is the identity") {
  circuit c("id", 2);
  c.set_input(1, "X");
  c.set_input(2, "Y");
  const auto table = circuit_truth_table(c, lib, table_scope::all_lines);
  for (unsigned x = 0; x < 4; ++x) {
    CHECK(table.out_code(x) == x);
  }
}

TEST_CASE("single-gate circuit table equals the gate table") {
  circuit c("f", 2);
  c.set_input(1, "A");
  c.set_input(2, "B");
  c.add_instance("FEYNMAN", {1, 2});
  CHECK(circuit_truth_table(c, lib, table_scope::all_lines) == gate_truth_table(lib.at("FEYNMAN")));
}

TEST_CASE("canonical circuit tables are bijections") {
  for (const auto& name : canonical_names()) {
    CAPTURE(name);
    CHECK(is_reversible(circuit_truth_table(canonical_by_name(name), lib, table_scope::all_lines)));
  }
}

TEST_CASE("simulate agrees with the free-input table") {
  for (const auto& name : canonical_names()) {
    const auto c = canonical_by_name(name);
    const auto labels = c.free_input_labels();
    const auto out_lines = c.named_output_lines();
    const auto table = circuit_truth_table(c, lib, table_scope::free_inputs);
    for (std::uint32_t x = 0; x < table.row_count(); ++x) {
      std::map<std::string, bool> binding;
      for (unsigned i = 0; i < labels.size(); ++i) {
        binding[labels[i]] = ((x >> i) & 1u) != 0;
      }
      const auto sim = simulate(c, lib, binding);
      for (unsigned k = 0; k < out_lines.size(); ++k) {
        CAPTURE(name);
        CHECK(sim.final_state.bit(out_lines[k] - 1) == table.output(x).bit(k));
      }
    }
  }
}

TEST_CASE("appending a self-inverse gate twice restores the table") {
  std::mt19937 rng(7);
  for (const char* name : {"FEYNMAN", "FREDKIN", "DOUBLE_FEYNMAN"}) {
    const auto& g = lib.at(name);
    for (int trial = 0; trial < 20; ++trial) {
      const unsigned n = g.width() + 1 + rng() % 2;
      circuit c("t", n);
      for (unsigned i = 1; i <= n; ++i) {
        c.set_input(i, "I" + std::to_string(i));
      }
      // a few random instances first
      for (int k = 0; k < 3; ++k) {
        const auto& rg = lib.at(n >= 3 && rng() % 2 == 0 ? "FREDKIN" : "FEYNMAN");
        std::vector<unsigned> all(n);
        std::iota(all.begin(), all.end(), 1u);
        std::shuffle(all.begin(), all.end(), rng);
        c.add_instance(rg.name(), std::vector<unsigned>(all.begin(), all.begin() + rg.width()));
      }
      const auto before = circuit_truth_table(c, lib, table_scope::all_lines);

      std::vector<unsigned> all(n);
      std::iota(all.begin(), all.end(), 1u);
      std::shuffle(all.begin(), all.end(), rng);
      const std::vector<unsigned> tuple(all.begin(), all.begin() + g.width());
      c.add_instance(name, tuple);
      c.add_instance(name, tuple);
      CAPTURE(name);
      CHECK(circuit_truth_table(c, lib, table_scope::all_lines) == before);
    }
  }
}

TEST_CASE("canonicalize renumbers by first use") {
  const auto canon = canonicalize(three_line_mux());
  // MUX tuple (1,3,2) puts original line 3 second and original line 2 last.
  CHECK(canon.instances()[0].lines == std::vector<unsigned>{1, 2, 3});
  CHECK(canon.line(1).in_label == "A");
  CHECK(canon.line(2).in_label == "B");
  CHECK(canon.line(3).in == input_role::const_zero);
}

TEST_CASE("enumeration bound on wide circuits") {
  circuit c("wide", 21);
  for (unsigned i = 1; i <= 21; ++i) {
    c.set_input(i, "I" + std::to_string(i));
  }
  CHECK_THROWS_AS(static_cast<void>(circuit_truth_table(c, lib, table_scope::all_lines)),
                  enumeration_limit_error);
}
