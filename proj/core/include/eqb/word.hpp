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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "eqb/group.hpp"
#include "eqb/rational.hpp"

namespace eqb {

enum class Mode { Eqb, Mgd };

/// Set of input variables x1..x63; bit (i - 1) stands for x_i.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}

  static VarSet single(unsigned var);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  bool contains(unsigned var) const;
  std::size_t size() const;
  /// Highest variable index present, 0 if empty.
  unsigned max_var() const;
  std::vector<unsigned> vars() const;

  /// Parity of the selected bits of an assignment mask (bit i-1 = x_i).
  bool parity(std::uint64_t assignment) const;

  constexpr VarSet operator^(VarSet other) const { return VarSet(bits_ ^ other.bits_); }

  friend constexpr bool operator==(VarSet, VarSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// a^exponent. Integer-valued in MGD mode.
struct Rot {
  Rational exponent;
  friend bool operator==(const Rot& l, const Rot& r) { return l.exponent == r.exponent; }
};

/// g^(XOR of the control variables).
struct Refl {
  VarSet controls;
  friend bool operator==(const Refl&, const Refl&) = default;
};

using CascadeLetter = std::variant<Rot, Refl>;

struct CascadeWord {
  DihedralParams params{2};
  Mode mode = Mode::Eqb;
  unsigned n_vars = 0;
  std::vector<CascadeLetter> letters;
  /// Input variable the rotations act on; nullopt means a separate ancilla.
  std::optional<unsigned> target_var;

  std::size_t rotation_count() const;
  /// Sum of all Refl control-set sizes (one-variable letters each count once).
  std::size_t control_count() const;
  /// String elements: every rotation plus one per control variable of each g.
  /// Equals letters.size() for canonical words.
  std::size_t element_count() const { return rotation_count() + control_count(); }

  friend bool operator==(const CascadeWord&, const CascadeWord&) = default;
};

/// Result of folding a word: net rotation exponent and reflection flag.
/// MGD folds keep rotation as an integer in [0, n).
struct WordValue {
  Rational rotation;
  bool reflection = false;

  friend bool operator==(const WordValue& l, const WordValue& r) {
    return l.rotation == r.rotation && l.reflection == r.reflection;
  }
};

/// Packs a 0/1 assignment (assignment[0] = x1) into a mask, bit i-1 = x_i.
std::uint64_t assignment_mask(std::span<const std::uint8_t> assignment);

/// Bits of truth-table row `row` for n variables (x1 most significant).
std::vector<std::uint8_t> row_assignment(std::uint64_t row, unsigned n);

/// Substitutes `assignment` into every g-letter and folds the word left to right.
/// Throws std::out_of_range naming the first variable the assignment does not bind.
WordValue evaluate_word(const CascadeWord& word, std::span<const std::uint8_t> assignment);

/// MGD value as a group element; throws if the rotation is not an integer.
GroupElement to_element(const WordValue& value, const DihedralParams& p);

std::string to_string(const CascadeLetter& letter);
/// Letters separated by single spaces, e.g. "a^-1 g[x1,x2] a^1 g[x1,x2]".
std::string to_string(const CascadeWord& word);

}  // namespace eqb
