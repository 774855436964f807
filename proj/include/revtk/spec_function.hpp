/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file spec_function.hpp
  \brief Reference multi-output Boolean functions

  These are the target behaviors circuits are checked against: the
  classic half/full adder and subtractor plus the combined
  adder/subtractor with a control line (ctrl = 0 adds, ctrl = 1
  subtracts; *_SUBADD variants use the opposite convention).
*/

#pragma once

#include "revtk/bit_vector.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace revtk {

class spec_function {
public:
  spec_function(std::string name,
                std::vector<std::string> input_labels,
                std::vector<std::string> output_labels,
                std::function<std::uint32_t(std::uint32_t)> eval_code)
      : name_(std::move(name)),
        inputs_(std::move(input_labels)),
        outputs_(std::move(output_labels)),
        eval_code_(std::move(eval_code)) {}

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::vector<std::string>& input_labels() const { return inputs_; }
  [[nodiscard]] const std::vector<std::string>& output_labels() const { return outputs_; }

  //! Input code bit i = i-th input label; output code bit j = j-th output.
  [[nodiscard]] std::uint32_t eval_code(std::uint32_t in) const { return eval_code_(in); }

  [[nodiscard]] bit_vector eval(const bit_vector& in) const {
    return bit_vector(static_cast<unsigned>(outputs_.size()), eval_code_(in.code()));
  }

  //! Registry lookup; throws binding_error for unknown names.
  static const spec_function& by_name(std::string_view name);

  static std::vector<std::string> names();

private:
  std::string name_;
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
  std::function<std::uint32_t(std::uint32_t)> eval_code_;
};

} // namespace revtk
