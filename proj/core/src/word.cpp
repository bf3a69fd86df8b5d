// Copyright 2026 The eqb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eqb/word.hpp"

#include <bit>
#include <stdexcept>

namespace eqb {

VarSet VarSet::single(unsigned var) {
  if (var < 1 || var > 63) {
    throw std::out_of_range("variable index x" + std::to_string(var) + " outside 1..63");
  }
  return VarSet(std::uint64_t{1} << (var - 1));
}

bool VarSet::contains(unsigned var) const {
  return var >= 1 && var <= 63 && ((bits_ >> (var - 1)) & 1U) != 0;
}

std::size_t VarSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

unsigned VarSet::max_var() const { return static_cast<unsigned>(std::bit_width(bits_)); }

std::vector<unsigned> VarSet::vars() const {
  std::vector<unsigned> out;
  for (unsigned v = 1; v <= max_var(); ++v) {
    if (contains(v)) {
      out.push_back(v);
    }
  }
  return out;
}

bool VarSet::parity(std::uint64_t assignment) const {
  return (std::popcount(bits_ & assignment) & 1) != 0;
}

std::size_t CascadeWord::rotation_count() const {
  std::size_t count = 0;
  for (const auto& letter : letters) {
    count += std::holds_alternative<Rot>(letter) ? 1 : 0;
  }
  return count;
}

std::size_t CascadeWord::control_count() const {
  std::size_t count = 0;
  for (const auto& letter : letters) {
    if (const auto* refl = std::get_if<Refl>(&letter)) {
      count += refl->controls.size();
    }
  }
  return count;
}

std::uint64_t assignment_mask(std::span<const std::uint8_t> assignment) {
  if (assignment.size() > 63) {
    throw std::out_of_range("assignments are limited to 63 variables");
  }
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] > 1) {
      throw std::invalid_argument("assignment value for x" + std::to_string(i + 1) +
                                  " is not a bit");
    }
    mask |= std::uint64_t{assignment[i]} << i;
  }
  return mask;
}

std::vector<std::uint8_t> row_assignment(std::uint64_t row, unsigned n) {
  std::vector<std::uint8_t> bits(n);
  for (unsigned i = 0; i < n; ++i) {
    bits[i] = static_cast<std::uint8_t>((row >> (n - 1 - i)) & 1U);
  }
  return bits;
}

WordValue evaluate_word(const CascadeWord& word, std::span<const std::uint8_t> assignment) {
  const std::uint64_t mask = assignment_mask(assignment);
  const auto bound = static_cast<unsigned>(assignment.size());

  if (word.mode == Mode::Mgd) {
    const DihedralParams& p = word.params;
    GroupElement acc = GroupElement::identity(p);
    for (const auto& letter : word.letters) {
      if (const auto* rot = std::get_if<Rot>(&letter)) {
        if (!is_integer(rot->exponent)) {
          throw std::invalid_argument("MGD word holds non-integer exponent " +
                                      to_string(rot->exponent));
        }
        const std::int64_t w = floor_mod(rot->exponent.get_num().get_si(), p.n());
        acc = mul(acc, GroupElement(w, false, p), p);
      } else {
        const VarSet controls = std::get<Refl>(letter).controls;
        if (controls.max_var() > bound) {
          throw std::out_of_range("unbound variable x" + std::to_string(controls.max_var()));
        }
        acc = mul(acc, GroupElement(0, controls.parity(mask), p), p);
      }
    }
    return {Rational(acc.rot()), acc.refl()};
  }

  // Exact fold: pushing g through a^w flips the sign of w (g a^w g = a^-w).
  WordValue value;
  for (const auto& letter : word.letters) {
    if (const auto* rot = std::get_if<Rot>(&letter)) {
      if (value.reflection) {
        value.rotation -= rot->exponent;
      } else {
        value.rotation += rot->exponent;
      }
    } else {
      const VarSet controls = std::get<Refl>(letter).controls;
      if (controls.max_var() > bound) {
        throw std::out_of_range("unbound variable x" + std::to_string(controls.max_var()));
      }
      value.reflection = value.reflection != controls.parity(mask);
    }
  }
  return value;
}

GroupElement to_element(const WordValue& value, const DihedralParams& p) {
  if (!is_integer(value.rotation) || !value.rotation.get_num().fits_slong_p()) {
    throw std::invalid_argument("rotation " + to_string(value.rotation) +
                                " is not a group exponent");
  }
  return {value.rotation.get_num().get_si(), value.reflection, p};
}

std::string to_string(const CascadeLetter& letter) {
  if (const auto* rot = std::get_if<Rot>(&letter)) {
    return "a^" + to_string(rot->exponent);
  }
  std::string s = "g[";
  bool first = true;
  for (const unsigned v : std::get<Refl>(letter).controls.vars()) {
    if (!first) {
      s += ',';
    }
    s += 'x' + std::to_string(v);
    first = false;
  }
  s += ']';
  return s;
}

std::string to_string(const CascadeWord& word) {
  std::string s;
  for (const auto& letter : word.letters) {
    if (!s.empty()) {
      s += ' ';
    }
    s += to_string(letter);
  }
  return s;
}

}  // namespace eqb
