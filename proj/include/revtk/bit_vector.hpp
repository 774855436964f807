/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file bit_vector.hpp
  \brief Fixed-width vectors of bits over circuit lines

  Bit 0 of the integer code corresponds to line 1.  The display string
  prints line 1 first, so reading a display string as a binary number
  gives the conventional truth-table ordering (line 1 = most significant).
*/

#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace revtk {

class bit_vector {
public:
  bit_vector() = default;

  explicit bit_vector(unsigned width, std::uint32_t code = 0) : bits_(code), width_(width) {
    assert(width >= 1 && width <= 32);
    bits_ &= mask();
  }

  //! Builds a vector from line values in line order (first value = line 1).
  static bit_vector of(std::initializer_list<int> values) {
    bit_vector v(static_cast<unsigned>(values.size()));
    unsigned i = 0;
    for (int b : values) {
      v.set_bit(i++, b != 0);
    }
    return v;
  }

  static bit_vector from_code(std::uint32_t code, unsigned width) { return bit_vector(width, code); }

  [[nodiscard]] unsigned width() const { return width_; }

  [[nodiscard]] bool bit(unsigned i) const {
    assert(i < width_);
    return ((bits_ >> i) & 1u) != 0;
  }

  void set_bit(unsigned i, bool value) {
    assert(i < width_);
    if (value) {
      bits_ |= (1u << i);
    } else {
      bits_ &= ~(1u << i);
    }
  }

  //! Integer code with bit 0 = line 1.
  [[nodiscard]] std::uint32_t code() const { return bits_; }

  //! Integer value of the display string (line 1 = most significant bit).
  [[nodiscard]] std::uint32_t display_code() const {
    std::uint32_t v = 0;
    for (unsigned i = 0; i < width_; ++i) {
      v = (v << 1) | (bit(i) ? 1u : 0u);
    }
    return v;
  }

  //! XOR of all bits.
  [[nodiscard]] bool parity() const {
    std::uint32_t v = bits_;
    v ^= v >> 16;
    v ^= v >> 8;
    v ^= v >> 4;
    v ^= v >> 2;
    v ^= v >> 1;
    return (v & 1u) != 0;
  }

  //! Line 1 is the leftmost character.
  [[nodiscard]] std::string to_string() const {
    std::string s(width_, '0');
    for (unsigned i = 0; i < width_; ++i) {
      if (bit(i)) {
        s[i] = '1';
      }
    }
    return s;
  }

  friend bool operator==(const bit_vector& a, const bit_vector& b) {
    return a.width_ == b.width_ && a.bits_ == b.bits_;
  }

private:
  [[nodiscard]] std::uint32_t mask() const {
    return width_ >= 32 ? ~0u : ((1u << width_) - 1u);
  }

  std::uint32_t bits_ = 0;
  unsigned width_ = 0;
};

} // namespace revtk
