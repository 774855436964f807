/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

#include "revtk/canonical.hpp"

#include "revtk/errors.hpp"

namespace revtk {

// Line 1 = A, 2 = B, 3 = ctrl, 4 = ancilla.  The first FEYNMAN folds the
// control into A so the MUX product B(A^ctrl) is the carry for ctrl=0 and
// the borrow for ctrl=1; the second FEYNMAN removes the control again from
// the sum line.  The trailing MUX completes the inventory on garbage lines.
circuit canonical_half_addsub() {
  circuit c("HALF_ADDSUB_R", 4);
  c.set_input(1, "A");
  c.set_input(2, "B");
  c.set_input(3, "ctrl");
  c.set_const(4, false);
  c.add_instance("FEYNMAN", {3, 1});
  c.add_instance("MUX", {1, 2, 4});
  c.add_instance("FEYNMAN", {3, 2});
  c.add_instance("MUX", {2, 1, 3});
  c.set_output(2, "SD");
  c.set_output(4, "CB");
  return c;
}

// Carry/borrow as maj(A,B,C) xor ctrl&(B^C): the first MUX starts the
// majority with AB, the TR adds C(A^B) while un-complementing the sum
// line, and the second MUX folds in the control term.
circuit canonical_full_addsub() {
  circuit c("FULL_ADDSUB_R", 6);
  c.set_input(1, "A");
  c.set_input(2, "B");
  c.set_input(3, "C");
  c.set_input(4, "ctrl");
  c.set_const(5, true);
  c.set_const(6, false);
  c.add_instance("MUX", {1, 2, 6});
  c.add_instance("FEYNMAN", {5, 2});
  c.add_instance("TR", {3, 2, 6});
  c.add_instance("FEYNMAN", {5, 2});
  c.add_instance("FEYNMAN", {2, 1});
  c.add_instance("FEYNMAN", {6, 1});
  c.add_instance("MUX", {4, 1, 6});
  c.add_instance("FEYNMAN", {4, 3});
  c.set_output(2, "SD");
  c.set_output(6, "CB");
  return c;
}

// DOUBLE_FEYNMAN puts A^B on line 1 and a copy of B on line 4; the MUX
// then produces (A^B)B = A'B as the borrow.
circuit canonical_pp_half_sub() {
  circuit c("PP_HALF_SUB", 4);
  c.set_input(1, "A");
  c.set_input(2, "B");
  c.set_const(3, false);
  c.set_const(4, false);
  c.add_instance("DOUBLE_FEYNMAN", {2, 1, 4});
  c.add_instance("MUX", {1, 2, 3});
  c.set_output(1, "Diff");
  c.set_output(3, "Borrow");
  return c;
}

// Six lines with A and B each driving two rails, one ancilla.  The single
// MUX realizes the borrow via Borr = (A^B)'C xor (A^B)B; the remaining
// DOUBLE_FEYNMAN gates assemble the difference on line 4.
circuit canonical_pp_full_sub() {
  circuit c("PP_FULL_SUB", 6);
  c.set_input(1, "A");
  c.set_input(2, "B");
  c.set_input(3, "C");
  c.set_input(4, "A");
  c.set_input(5, "B");
  c.set_const(6, false);
  c.add_instance("DOUBLE_FEYNMAN", {1, 2, 6});
  c.add_instance("MUX", {2, 5, 3});
  c.add_instance("DOUBLE_FEYNMAN", {2, 6, 4});
  c.add_instance("DOUBLE_FEYNMAN", {5, 4, 1});
  c.set_output(3, "Borr");
  c.set_output(4, "Diff");
  return c;
}

std::vector<std::string> canonical_names() {
  return {"HALF_ADDSUB_R", "FULL_ADDSUB_R", "PP_HALF_SUB", "PP_FULL_SUB"};
}

circuit canonical_by_name(std::string_view name) {
  if (name == "HALF_ADDSUB_R") {
    return canonical_half_addsub();
  }
  if (name == "FULL_ADDSUB_R") {
    return canonical_full_addsub();
  }
  if (name == "PP_HALF_SUB") {
    return canonical_pp_half_sub();
  }
  if (name == "PP_FULL_SUB") {
    return canonical_pp_full_sub();
  }
  throw binding_error("unknown canonical circuit: " + std::string(name));
}

const spec_function& canonical_target(std::string_view name) {
  if (name == "HALF_ADDSUB_R") {
    return spec_function::by_name("HALF_ADDSUB");
  }
  if (name == "FULL_ADDSUB_R") {
    return spec_function::by_name("FULL_ADDSUB");
  }
  if (name == "PP_HALF_SUB") {
    return spec_function::by_name("HALF_SUB");
  }
  if (name == "PP_FULL_SUB") {
    return spec_function::by_name("FULL_SUB");
  }
  throw binding_error("unknown canonical circuit: " + std::string(name));
}

} // namespace revtk
