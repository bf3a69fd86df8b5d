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

#include "eqb/cascade.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

namespace eqb {

namespace {

bool is_zero_rotation(const Rational& exponent, const CascadeWord& word) {
  if (word.mode == Mode::Mgd) {
    return floor_mod(exponent.get_num().get_si(), word.params.n()) == 0;
  }
  return exponent == 0;
}

Rational normalized(const Rational& exponent, const CascadeWord& word) {
  if (word.mode == Mode::Mgd) {
    if (!is_integer(exponent) || !exponent.get_num().fits_slong_p()) {
      throw std::invalid_argument("MGD word holds non-integer exponent " + to_string(exponent));
    }
    return Rational(signed_residue(exponent.get_num().get_si(), word.params.n()));
  }
  return exponent;
}

}  // namespace

CascadeWord canonical_cascade(const WalshSpectrum& spectrum, const DihedralParams& p) {
  const unsigned n = spectrum.n;
  if (n > kHardMaxVariables || spectrum.coeffs.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("spectrum holds " + std::to_string(spectrum.coeffs.size()) +
                                " coefficients, expected 2^" + std::to_string(n));
  }
  CascadeWord word;
  word.params = p;
  word.n_vars = n;
  word.mode = spectrum.modulus ? Mode::Mgd : Mode::Eqb;
  if (spectrum.modulus) {
    if (*spectrum.modulus % p.n() != 0) {
      throw std::invalid_argument("spectrum modulus " + std::to_string(*spectrum.modulus) +
                                  " is not a multiple of the dihedral parameter " +
                                  std::to_string(p.n()));
    }
    for (const auto& c : spectrum.coeffs) {
      if (!is_integer(c)) {
        throw std::invalid_argument("modular spectrum holds non-integer coefficient " +
                                    to_string(c));
      }
    }
  }

  const std::size_t rows = spectrum.coeffs.size();
  word.letters.reserve(3 * rows - 2);
  for (std::size_t k = 1; k <= rows; ++k) {
    word.letters.emplace_back(Rot{spectrum.coeffs[k - 1]});
    for (unsigned i = 0; i < n && k % (std::size_t{1} << i) == 0; ++i) {
      word.letters.emplace_back(Refl{VarSet::single(n - i)});
    }
  }
  return word;
}

CascadeWord simplify(const CascadeWord& word) {
  CascadeWord out = word;
  out.letters.clear();
  auto& stack = out.letters;

  for (const auto& letter : word.letters) {
    if (const auto* rot = std::get_if<Rot>(&letter)) {
      Rational exponent = normalized(rot->exponent, word);
      if (is_zero_rotation(exponent, word)) {
        continue;
      }
      if (!stack.empty()) {
        if (auto* top = std::get_if<Rot>(&stack.back())) {
          exponent = normalized(top->exponent + exponent, word);
          stack.pop_back();
          if (is_zero_rotation(exponent, word)) {
            continue;
          }
        }
      }
      stack.emplace_back(Rot{exponent});
    } else {
      VarSet controls = std::get<Refl>(letter).controls;
      if (controls.empty()) {
        continue;
      }
      if (!stack.empty()) {
        if (auto* top = std::get_if<Refl>(&stack.back())) {
          controls = controls ^ top->controls;
          stack.pop_back();
          if (controls.empty()) {
            continue;
          }
        }
      }
      stack.emplace_back(Refl{controls});
    }
  }
  return out;
}

bool detect_symmetry(const TruthVector& truth) {
  if (truth.n < 1 || !truth.is_binary()) {
    return false;
  }
  for (std::size_t row = 0; row < truth.size(); row += 2) {
    if (truth[row] == truth[row + 1]) {
      return false;
    }
  }
  return true;
}

CascadeWord reduce_by_symmetry(const TruthVector& truth, const DihedralParams& p) {
  if (!detect_symmetry(truth)) {
    throw std::invalid_argument("truth vector is not odd in its least significant variable");
  }
  std::vector<std::int64_t> half;
  half.reserve(truth.size() / 2);
  for (std::size_t row = 0; row < truth.size(); row += 2) {
    half.push_back(truth[row]);
  }
  const TruthVector h(truth.n - 1, std::move(half));
  CascadeWord word = simplify(canonical_cascade(spectrum_exact(h), p));
  word.n_vars = truth.n;
  word.target_var = truth.n;
  return word;
}

bool ClassicalReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.pass; });
}

std::vector<std::uint64_t> ClassicalReport::failing_rows() const {
  std::vector<std::uint64_t> out;
  for (const auto& r : rows) {
    if (!r.pass) {
      out.push_back(r.row);
    }
  }
  return out;
}

std::string to_string(const WordValue& value) {
  std::string s = "a^" + to_string(value.rotation);
  if (value.reflection) {
    s += " g";
  }
  return s;
}

ClassicalReport verify_classical(const CascadeWord& word, const TruthVector& truth) {
  if (word.n_vars != truth.n) {
    throw std::invalid_argument("word has " + std::to_string(word.n_vars) +
                                " variables, truth vector has " + std::to_string(truth.n));
  }
  ClassicalReport report;
  report.rows.reserve(truth.size());
  for (std::size_t row = 0; row < truth.size(); ++row) {
    const auto assignment = row_assignment(row, truth.n);
    const WordValue value = evaluate_word(word, assignment);
    RowCheck check;
    check.row = row;
    if (word.mode == Mode::Mgd) {
      const DihedralParams& p = word.params;
      const GroupElement want(truth[row], false, p);
      const GroupElement got = to_element(value, p);
      check.expected = to_string(want, p);
      check.actual = to_string(got, p);
      check.pass = got == want;
    } else {
      std::int64_t want = truth[row];
      if (word.target_var) {
        want ^= assignment.at(*word.target_var - 1);
      }
      const WordValue expected{Rational(want), false};
      check.expected = to_string(expected);
      check.actual = to_string(value);
      check.pass = value == expected;
    }
    report.rows.push_back(std::move(check));
  }
  return report;
}

}  // namespace eqb
