/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "revtk/canonical.hpp"
#include "revtk/errors.hpp"
#include "revtk/netlist_io.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace revtk;

namespace {

const gate_library lib;

constexpr const char* example_text = R"(# a 3-line example
circuit example
lines 3
line 1 input A
line 2 const 0
line 3 input B
gate MUX 1 2 3
)";

} // namespace

TEST_CASE("parse a minimal netlist") {
  const auto c = parse_netlist(example_text, lib);
  CHECK(c.name() == "example");
  CHECK(c.line_count() == 3);
  REQUIRE(c.instances().size() == 1);
  CHECK(c.instances()[0].gate_name == "MUX");
  CHECK(c.instances()[0].lines == std::vector<unsigned>{1, 2, 3});
  CHECK(c.line(1).in_label == "A");
  CHECK(c.line(2).in == input_role::const_zero);
  // no output directives: everything is garbage
  CHECK(c.named_output_lines().empty());
  CHECK(c.garbage_lines().size() == 3);
}

TEST_CASE("out-of-range line index is rejected with a location") {
  const char* text = "circuit t\nlines 3\nline 1 input A\nline 2 const 0\nline 3 input B\ngate MUX 1 2 9\n";
  try {
    static_cast<void>(parse_netlist(text, lib));
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 6);
    CHECK(doctest::Contains("out of range").checkWith(e.what()));
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    static_cast<void>(parse_netlist("circuit t\nlines 2\nline 1 inputt A\n", lib));
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 8);
  }
  CHECK_THROWS_AS(static_cast<void>(parse_netlist("", lib)), parse_error);
  CHECK_THROWS_AS(static_cast<void>(parse_netlist("circuit t\n", lib)), parse_error);
  CHECK_THROWS_AS(static_cast<void>(parse_netlist("lines 2\ncircuit t\n", lib)), parse_error);
  CHECK_THROWS_AS(static_cast<void>(parse_netlist("circuit t\nlines 2\nline 1 const 2\n", lib)),
                  parse_error);
  CHECK_THROWS_AS(static_cast<void>(parse_netlist("circuit t\nlines 2\nwhatever\n", lib)), parse_error);
}

TEST_CASE("duplicate role directives are rejected") {
  CHECK_THROWS_AS(static_cast<void>(parse_netlist(
                      "circuit t\nlines 2\nline 1 input A\nline 1 const 0\nline 2 input B\n", lib)),
                  parse_error);
  CHECK_THROWS_AS(
      static_cast<void>(parse_netlist("circuit t\nlines 2\nline 1 input A\nline 2 input B\n"
                                      "output 1 X\noutput 1 Y\n",
                                      lib)),
      parse_error);
  CHECK_THROWS_AS(
      static_cast<void>(parse_netlist("circuit t\nlines 2\nline 1 input A\nline 2 input B\n"
                                      "output 1 X\ngarbage 1\n",
                                      lib)),
      parse_error);
}

TEST_CASE("missing input role is a validation error") {
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_netlist("circuit t\nlines 2\nline 1 input A\n", lib)),
                       doctest::Contains("input role"), validation_error);
}

TEST_CASE("round trip of the bundled netlists is byte-exact") {
  for (const auto& name : canonical_names()) {
    const auto text = serialize_netlist(canonical_by_name(name));
    CAPTURE(name);
    CHECK(serialize_netlist(parse_netlist(text, lib)) == text);
  }
}

TEST_CASE("parse of serialized equals the original circuit") {
  for (const auto& name : canonical_names()) {
    const auto c = canonical_by_name(name);
    CHECK(parse_netlist(serialize_netlist(c), lib) == c);
  }
}

TEST_CASE("round trip of random circuits") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 3 + rng() % 3;
    circuit c("r" + std::to_string(trial), n);
    unsigned named = 0;
    for (unsigned i = 1; i <= n; ++i) {
      switch (rng() % 3) {
      case 0:
        c.set_const(i, rng() % 2 == 0);
        break;
      default:
        c.set_input(i, "I" + std::to_string(++named));
        break;
      }
    }
    const unsigned gates = rng() % 4;
    for (unsigned k = 0; k < gates; ++k) {
      const auto& g = lib.gates()[rng() % lib.gates().size()];
      if (g.width() > n) {
        continue;
      }
      std::vector<unsigned> all(n);
      std::iota(all.begin(), all.end(), 1u);
      std::shuffle(all.begin(), all.end(), rng);
      c.add_instance(g.name(), std::vector<unsigned>(all.begin(), all.begin() + g.width()));
    }
    if (rng() % 2 == 0) {
      c.set_output(1 + rng() % n, "OUT");
    }
    const auto text = serialize_netlist(c);
    CHECK(parse_netlist(text, lib) == c);
    CHECK(serialize_netlist(parse_netlist(text, lib)) == text);
  }
}

TEST_CASE("whitespace and comments do not change the parse") {
  const auto base = parse_netlist(example_text, lib);
  const char* noisy =
      "circuit example   # name\n\n"
      "  lines   3\n"
      "line 1 input A# inline\n"
      "line 2 const 0\n"
      "   line 3 input B\n"
      "gate   MUX  1 2 3\n\n";
  CHECK(parse_netlist(noisy, lib) == base);
}
