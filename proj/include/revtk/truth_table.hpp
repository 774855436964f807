/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file truth_table.hpp
  \brief Dense multi-output truth tables

  Rows are stored densely, indexed by the input code (bit 0 = first
  input).  Display order sorts rows by the conventional reading with the
  first input as the most significant bit.
*/

#pragma once

#include "revtk/bit_vector.hpp"

#include <cstdint>
#include <vector>

namespace revtk {

class truth_table {
public:
  truth_table(unsigned in_width, unsigned out_width)
      : in_width_(in_width), out_width_(out_width), out_codes_(std::uint64_t(1) << in_width, 0) {}

  [[nodiscard]] unsigned in_width() const { return in_width_; }
  [[nodiscard]] unsigned out_width() const { return out_width_; }
  [[nodiscard]] std::uint64_t row_count() const { return out_codes_.size(); }

  void set(std::uint32_t in_code, std::uint32_t out_code) { out_codes_[in_code] = out_code; }

  [[nodiscard]] std::uint32_t out_code(std::uint32_t in_code) const { return out_codes_[in_code]; }

  [[nodiscard]] bit_vector input(std::uint32_t in_code) const { return bit_vector(in_width_, in_code); }

  [[nodiscard]] bit_vector output(std::uint32_t in_code) const {
    return bit_vector(out_width_, out_codes_[in_code]);
  }

  struct row {
    bit_vector in;
    bit_vector out;
  };

  //! Input code of the r-th row in display order (first input = MSB).
  [[nodiscard]] std::uint32_t display_input(std::uint64_t r) const {
    std::uint32_t code = 0;
    for (unsigned i = 0; i < in_width_; ++i) {
      if ((r >> (in_width_ - 1 - i)) & 1u) {
        code |= (1u << i);
      }
    }
    return code;
  }

  [[nodiscard]] row display_row(std::uint64_t r) const {
    const auto code = display_input(r);
    return {input(code), output(code)};
  }

  friend bool operator==(const truth_table&, const truth_table&) = default;

private:
  unsigned in_width_;
  unsigned out_width_;
  std::vector<std::uint32_t> out_codes_;
};

//! True iff the table's output column is a permutation of its input domain.
[[nodiscard]] bool is_reversible(const truth_table& table);

} // namespace revtk
