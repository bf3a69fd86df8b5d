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

#include "eqb/spectral.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "eqb/group.hpp"

namespace eqb {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in Walsh transform");
  }
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in Walsh transform");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in matrix product");
  }
  return out;
}

}  // namespace

TruthVector::TruthVector(unsigned n_, std::vector<std::int64_t> values_)
    : n(n_), values(std::move(values_)) {
  if (n > kHardMaxVariables) {
    throw std::invalid_argument("truth vector has " + std::to_string(n) +
                                " variables, limit is " + std::to_string(kHardMaxVariables));
  }
  if (values.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("truth vector for n=" + std::to_string(n) + " needs " +
                                std::to_string(std::size_t{1} << n) + " values, got " +
                                std::to_string(values.size()));
  }
}

TruthVector TruthVector::from_digits(std::string_view digits) {
  if (digits.empty() || !std::has_single_bit(digits.size())) {
    throw std::invalid_argument("truth string length " + std::to_string(digits.size()) +
                                " is not a power of two");
  }
  std::vector<std::int64_t> values;
  values.reserve(digits.size());
  for (const char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument(std::string("truth string holds non-digit '") + c + "'");
    }
    values.push_back(c - '0');
  }
  const auto n = static_cast<unsigned>(std::countr_zero(digits.size()));
  return {n, std::move(values)};
}

bool TruthVector::is_binary() const {
  return std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0 || v == 1; });
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::kron(const IntMatrix& other) const {
  IntMatrix out(rows_ * other.rows_, cols_ * other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const std::int64_t s = (*this)(r, c);
      for (std::size_t i = 0; i < other.rows_; ++i) {
        for (std::size_t j = 0; j < other.cols_; ++j) {
          out(r * other.rows_ + i, c * other.cols_ + j) = checked_mul(s, other(i, j));
        }
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("matrix dimensions do not agree");
  }
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t s = (*this)(r, k);
      if (s == 0) {
        continue;
      }
      for (std::size_t c = 0; c < other.cols_; ++c) {
        out(r, c) = checked_add(out(r, c), checked_mul(s, other(k, c)));
      }
    }
  }
  return out;
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("vector length does not match matrix columns");
  }
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out[r] = checked_add(out[r], checked_mul((*this)(r, c), v[c]));
    }
  }
  return out;
}

IntMatrix IntMatrix::scaled(std::int64_t factor) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) {
    x = checked_mul(x, factor);
  }
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) {
    return false;
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) {
        return false;
      }
    }
  }
  return true;
}

IntMatrix walsh_matrix(unsigned n) {
  if (n < 1 || n > kDefaultMaxVariables) {
    throw std::invalid_argument("walsh_matrix order must be in 1..10, got " + std::to_string(n));
  }
  IntMatrix base(2, 2);
  base(0, 0) = 1;
  base(0, 1) = 1;
  base(1, 0) = 1;
  base(1, 1) = -1;
  IntMatrix w = base;
  for (unsigned i = 1; i < n; ++i) {
    w = w.kron(base);
  }
  return w;
}

std::vector<std::int64_t> fwht(std::span<const std::int64_t> v) {
  if (v.empty() || !std::has_single_bit(v.size())) {
    throw std::invalid_argument("fwht length " + std::to_string(v.size()) +
                                " is not a power of two");
  }
  std::vector<std::int64_t> out(v.begin(), v.end());
  for (std::size_t half = 1; half < out.size(); half <<= 1) {
    for (std::size_t block = 0; block < out.size(); block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const std::int64_t x = out[i];
        const std::int64_t y = out[i + half];
        out[i] = checked_add(x, y);
        out[i + half] = checked_sub(x, y);
      }
    }
  }
  return out;
}

std::int64_t modinv(std::int64_t a, std::int64_t m) {
  if (m < 2) {
    throw std::invalid_argument("modinv modulus must be >= 2, got " + std::to_string(m));
  }
  // Extended Euclid on (a mod m, m).
  std::int64_t r0 = floor_mod(a, m);
  std::int64_t r1 = m;
  std::int64_t s0 = 1;
  std::int64_t s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    throw std::invalid_argument("modinv(" + std::to_string(a) + ", " + std::to_string(m) +
                                "): gcd is " + std::to_string(r0) + ", not 1");
  }
  return floor_mod(s0, m);
}

WalshSpectrum spectrum_exact(const TruthVector& truth) {
  if (!truth.is_binary()) {
    throw std::invalid_argument("exact spectrum needs a binary truth vector");
  }
  const auto transformed = fwht(truth.values);
  WalshSpectrum spectrum{truth.n, {}, std::nullopt};
  spectrum.coeffs.reserve(transformed.size());
  const auto denom = static_cast<std::int64_t>(truth.size());
  for (const auto t : transformed) {
    spectrum.coeffs.push_back(make_rational(t, denom));
  }
  return spectrum;
}

WalshSpectrum spectrum_mod(const TruthVector& truth, std::int64_t modulus) {
  if (modulus < 3 || modulus % 2 == 0) {
    throw std::invalid_argument("spectrum modulus must be odd and >= 3, got " +
                                std::to_string(modulus) + " (2^n is not invertible otherwise)");
  }
  const std::int64_t scale = modinv(floor_mod(static_cast<std::int64_t>(truth.size()), modulus),
                                    modulus);
  const auto transformed = fwht(truth.values);
  WalshSpectrum spectrum{truth.n, {}, modulus};
  spectrum.coeffs.reserve(transformed.size());
  for (const auto t : transformed) {
    const std::int64_t residue = floor_mod(floor_mod(t, modulus) * scale, modulus);
    spectrum.coeffs.emplace_back(signed_residue(residue, modulus));
  }
  return spectrum;
}

std::vector<Rational> reconstruct(const WalshSpectrum& spectrum) {
  const std::size_t size = spectrum.coeffs.size();
  if (size == 0 || !std::has_single_bit(size)) {
    throw std::invalid_argument("spectrum length is not a power of two");
  }
  std::vector<Rational> out(spectrum.coeffs);
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const Rational x = out[i];
        const Rational y = out[i + half];
        out[i] = x + y;
        out[i + half] = x - y;
      }
    }
  }
  if (spectrum.modulus) {
    const mpz_class m(static_cast<signed long>(*spectrum.modulus));
    for (auto& x : out) {
      mpz_class r = x.get_num() % m;
      if (r < 0) {
        r += m;
      }
      x = Rational(r);
    }
  }
  return out;
}

std::string to_string(const WalshSpectrum& spectrum) {
  std::string s = "[";
  for (std::size_t i = 0; i < spectrum.coeffs.size(); ++i) {
    if (i != 0) {
      s += ", ";
    }
    s += to_string(spectrum.coeffs[i]);
  }
  s += ']';
  return s;
}

}  // namespace eqb
