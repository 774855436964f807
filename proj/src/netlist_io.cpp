/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

#include "revtk/netlist_io.hpp"

#include "revtk/errors.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace revtk {

namespace {

struct token {
  std::string text;
  unsigned column; // 1-based
};

std::vector<token> tokenize(std::string_view line) {
  std::vector<token> tokens;
  unsigned col = 1;
  std::string current;
  unsigned start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i, ++col) {
    const char ch = i < line.size() ? line[i] : ' ';
    if (ch == '#') {
      break;
    }
    if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
      if (!current.empty()) {
        tokens.push_back({current, start});
        current.clear();
      }
    } else {
      if (current.empty()) {
        start = col;
      }
      current.push_back(ch);
    }
  }
  if (!current.empty()) {
    tokens.push_back({current, start});
  }
  return tokens;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || (std::isalpha(static_cast<unsigned char>(s[0])) == 0 && s[0] != '_')) {
    return false;
  }
  for (char ch : s) {
    if (std::isalnum(static_cast<unsigned char>(ch)) == 0 && ch != '_') {
      return false;
    }
  }
  return true;
}

unsigned parse_uint(const token& t, unsigned line_no) {
  unsigned value = 0;
  if (t.text.empty()) {
    throw parse_error("expected a number", line_no, t.column);
  }
  for (char ch : t.text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
      throw parse_error("expected a number, got '" + t.text + "'", line_no, t.column);
    }
    value = value * 10 + static_cast<unsigned>(ch - '0');
    if (value > 1'000'000u) {
      throw parse_error("number too large: " + t.text, line_no, t.column);
    }
  }
  return value;
}

} // namespace

circuit parse_netlist(std::string_view text, const gate_library& lib) {
  circuit c;
  bool have_header = false;
  bool have_lines = false;
  std::vector<bool> role_set;

  std::istringstream stream{std::string(text)};
  std::string raw;
  unsigned line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    const auto tokens = tokenize(raw);
    if (tokens.empty()) {
      continue;
    }
    const auto& head = tokens[0];
    const auto expect_count = [&](std::size_t n) {
      if (tokens.size() != n) {
        throw parse_error("directive '" + head.text + "' expects " + std::to_string(n - 1) +
                              " argument(s)",
                          line_no, head.column);
      }
    };
    const auto line_index = [&](const token& t) {
      const unsigned idx = parse_uint(t, line_no);
      if (!have_lines) {
        throw parse_error("'" + head.text + "' before 'lines'", line_no, head.column);
      }
      if (idx < 1 || idx > c.line_count()) {
        throw parse_error("line " + std::to_string(idx) + " out of range 1.." +
                              std::to_string(c.line_count()),
                          line_no, t.column);
      }
      return idx;
    };

    if (head.text == "circuit") {
      expect_count(2);
      if (have_header) {
        throw parse_error("duplicate 'circuit' directive", line_no, head.column);
      }
      if (!is_identifier(tokens[1].text)) {
        throw parse_error("bad circuit name '" + tokens[1].text + "'", line_no, tokens[1].column);
      }
      c.set_name(tokens[1].text);
      have_header = true;
    } else if (!have_header) {
      throw parse_error("expected 'circuit <name>' first", line_no, head.column);
    } else if (head.text == "lines") {
      expect_count(2);
      if (have_lines) {
        throw parse_error("duplicate 'lines' directive", line_no, head.column);
      }
      const unsigned n = parse_uint(tokens[1], line_no);
      if (n < 1 || n > 32) {
        throw parse_error("line count must be in 1..32", line_no, tokens[1].column);
      }
      c = circuit(c.name(), n);
      role_set.assign(n + 1, false);
      have_lines = true;
    } else if (head.text == "line") {
      expect_count(4);
      const unsigned idx = line_index(tokens[1]);
      if (role_set[idx]) {
        throw parse_error("line " + std::to_string(idx) + " already has an input role", line_no,
                          tokens[1].column);
      }
      role_set[idx] = true;
      if (tokens[2].text == "input") {
        if (!is_identifier(tokens[3].text)) {
          throw parse_error("bad label '" + tokens[3].text + "'", line_no, tokens[3].column);
        }
        c.set_input(idx, tokens[3].text);
      } else if (tokens[2].text == "const") {
        if (tokens[3].text == "0") {
          c.set_const(idx, false);
        } else if (tokens[3].text == "1") {
          c.set_const(idx, true);
        } else {
          throw parse_error("const value must be 0 or 1", line_no, tokens[3].column);
        }
      } else {
        throw parse_error("expected 'input' or 'const'", line_no, tokens[2].column);
      }
    } else if (head.text == "gate") {
      if (tokens.size() < 3) {
        throw parse_error("gate directive expects a name and line indices", line_no, head.column);
      }
      if (!is_identifier(tokens[1].text)) {
        throw parse_error("bad gate name '" + tokens[1].text + "'", line_no, tokens[1].column);
      }
      std::vector<unsigned> tuple;
      for (std::size_t k = 2; k < tokens.size(); ++k) {
        tuple.push_back(line_index(tokens[k]));
      }
      c.add_instance(tokens[1].text, std::move(tuple));
    } else if (head.text == "output") {
      expect_count(3);
      const unsigned idx = line_index(tokens[1]);
      if (c.line(idx).has_output) {
        throw parse_error("line " + std::to_string(idx) + " already has an output role", line_no,
                          tokens[1].column);
      }
      if (!is_identifier(tokens[2].text)) {
        throw parse_error("bad label '" + tokens[2].text + "'", line_no, tokens[2].column);
      }
      c.set_output(idx, tokens[2].text);
    } else if (head.text == "garbage") {
      expect_count(2);
      const unsigned idx = line_index(tokens[1]);
      if (c.line(idx).has_output) {
        throw parse_error("line " + std::to_string(idx) + " is a named output, cannot be garbage",
                          line_no, tokens[1].column);
      }
    } else {
      throw parse_error("unknown directive '" + head.text + "'", line_no, head.column);
    }
  }
  if (!have_header) {
    throw parse_error("empty netlist", line_no == 0 ? 1 : line_no, 1);
  }
  if (!have_lines) {
    throw parse_error("missing 'lines' directive", line_no, 1);
  }
  validate(c, lib);
  return c;
}

std::string serialize_netlist(const circuit& c) {
  std::ostringstream out;
  out << "circuit " << c.name() << "\n";
  out << "lines " << c.line_count() << "\n";
  for (unsigned i = 1; i <= c.line_count(); ++i) {
    const auto& l = c.line(i);
    out << "line " << i << " ";
    switch (l.in) {
    case input_role::named:
      out << "input " << l.in_label;
      break;
    case input_role::const_zero:
      out << "const 0";
      break;
    case input_role::const_one:
      out << "const 1";
      break;
    case input_role::unset:
      out << "input _";
      break;
    }
    out << "\n";
  }
  for (const auto& inst : c.instances()) {
    out << "gate " << inst.gate_name;
    for (unsigned idx : inst.lines) {
      out << " " << idx;
    }
    out << "\n";
  }
  for (unsigned i = 1; i <= c.line_count(); ++i) {
    if (c.line(i).has_output) {
      out << "output " << i << " " << c.line(i).out_label << "\n";
    }
  }
  for (unsigned i = 1; i <= c.line_count(); ++i) {
    if (!c.line(i).has_output) {
      out << "garbage " << i << "\n";
    }
  }
  return out.str();
}

} // namespace revtk
