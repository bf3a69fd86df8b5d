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
#include <string_view>
#include <vector>

#include "eqb/rational.hpp"

namespace eqb {

/// Default guard on the number of input variables.
inline constexpr unsigned kDefaultMaxVariables = 10;
/// Hard ceiling; beyond this a dense truth table no longer fits in memory.
inline constexpr unsigned kHardMaxVariables = 24;

/// Output values of an n-input function. Row index reads x1 x2 ... xn as a
/// binary number with x1 most significant.
struct TruthVector {
  unsigned n = 0;
  std::vector<std::int64_t> values;

  TruthVector() = default;
  TruthVector(unsigned n, std::vector<std::int64_t> values);

  /// "0110" style, one digit per row, row 0 first.
  static TruthVector from_digits(std::string_view digits);

  std::size_t size() const { return values.size(); }
  std::int64_t operator[](std::size_t row) const { return values[row]; }
  bool is_binary() const;

  friend bool operator==(const TruthVector&, const TruthVector&) = default;
};

/// Coefficients are exact rationals when modulus is empty (EQB) and signed
/// residues in (-m/2, m/2] otherwise (MGD).
struct WalshSpectrum {
  unsigned n = 0;
  std::vector<Rational> coeffs;
  std::optional<std::int64_t> modulus;

  friend bool operator==(const WalshSpectrum& l, const WalshSpectrum& r) {
    return l.n == r.n && l.coeffs == r.coeffs && l.modulus == r.modulus;
  }
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static IntMatrix identity(std::size_t n);
  IntMatrix kron(const IntMatrix& other) const;
  IntMatrix operator*(const IntMatrix& other) const;
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;
  IntMatrix scaled(std::int64_t factor) const;
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// n-fold Kronecker power of [[1, 1], [1, -1]], 1 <= n <= 10.
IntMatrix walsh_matrix(unsigned n);

/// In-place-free fast Walsh-Hadamard transform; equals walsh_matrix(n) * v.
/// Throws std::invalid_argument for non-power-of-two lengths and
/// std::overflow_error if an intermediate leaves int64 range.
std::vector<std::int64_t> fwht(std::span<const std::int64_t> v);

/// b in [1, m) with a*b = 1 (mod m).
std::int64_t modinv(std::int64_t a, std::int64_t m);

/// 2^-n * W_n * F over the rationals.
WalshSpectrum spectrum_exact(const TruthVector& truth);

/// modinv(2^n, m) * W_n * F reduced into signed residues; m must be odd.
WalshSpectrum spectrum_mod(const TruthVector& truth, std::int64_t modulus);

/// W_n * w, the inverse of spectrum_exact (exact) or of spectrum_mod (mod m).
std::vector<Rational> reconstruct(const WalshSpectrum& spectrum);

/// "[c0, c1, ...]" with rationals as p/q.
std::string to_string(const WalshSpectrum& spectrum);

}  // namespace eqb
