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
#include <string>
#include <vector>

#include "eqb/group.hpp"
#include "eqb/spectral.hpp"
#include "eqb/word.hpp"

namespace eqb {

/// Closed form of F = F_a g^{x1} F_b g^{x1} with x1 outermost: for k = 1..2^n,
/// a^{w_{k-1}} followed by g^{x_{n-i}} for every i with 2^i | k, x_n first.
/// The word has 3 * 2^n - 2 letters. MGD spectra need a modulus divisible by
/// p.n(); for EQB spectra p is carried along but does not affect arithmetic.
CascadeWord canonical_cascade(const WalshSpectrum& spectrum, const DihedralParams& p);

/// Rewrites to a fixed point of
///   R1  a^0            -> (nothing)
///   R2  g^{L1} g^{L2}  -> g^{L1 xor L2}, dropped when empty
///   R3  a^u a^v        -> a^{u+v}, dropped when zero
/// MGD exponents are reduced to signed residues mod n first. No rewrite moves a
/// rotation across a reflection.
CascadeWord simplify(const CascadeWord& word);

/// True iff f(X, x_n = 0) = not f(X, x_n = 1) for every X, i.e. f = x_n xor h(X).
bool detect_symmetry(const TruthVector& truth);

/// Simplified EQB cascade for h(X) = f(X, 0) over x1..x_{n-1}, targeted on x_n.
/// Throws std::invalid_argument unless detect_symmetry(truth).
CascadeWord reduce_by_symmetry(const TruthVector& truth, const DihedralParams& p);

struct RowCheck {
  std::uint64_t row = 0;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ClassicalReport {
  std::vector<RowCheck> rows;

  bool passed() const;
  std::vector<std::uint64_t> failing_rows() const;
};

/// Folds the word on every truth-table row. MGD rows must give a^{F(x) mod n};
/// EQB rows must give the exact exponent F(x) (x_n xor F(x) when targeted on x_n)
/// with no residual reflection. Failures are reported, not thrown.
ClassicalReport verify_classical(const CascadeWord& word, const TruthVector& truth);

std::string to_string(const WordValue& value);

}  // namespace eqb
