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

#include <doctest.h>

#include <functional>

#include "eqb/cascade.hpp"
#include "test_support.hpp"

using namespace eqb;
using eqb::testing::boolean_function;
using eqb::testing::odd_in_last;
using eqb::testing::random_truth;
using eqb::testing::rng;

namespace {

// Symbolic expansion of F = F_a g^{x_v} F_b g^{x_v} with the first remaining
// variable outermost; '*' marks a rotation slot.
std::string expand(unsigned first, unsigned n) {
  if (first > n) {
    return "*";
  }
  const std::string inner = expand(first + 1, n);
  const std::string g = "g" + std::to_string(first);
  return inner + " " + g + " " + inner + " " + g;
}

std::string shape(const CascadeWord& word) {
  std::string s;
  for (const auto& letter : word.letters) {
    if (!s.empty()) {
      s += ' ';
    }
    if (std::holds_alternative<Rot>(letter)) {
      s += '*';
    } else {
      s += "g" + std::to_string(std::get<Refl>(letter).controls.max_var());
    }
  }
  return s;
}

WalshSpectrum symbolic_spectrum(unsigned n) {
  WalshSpectrum w{n, {}, std::nullopt};
  for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
    w.coeffs.push_back(Rational(static_cast<long>(k + 1)));
  }
  return w;
}

bool same_on_all_rows(const CascadeWord& a, const CascadeWord& b) {
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << a.n_vars); ++row) {
    const auto bits = row_assignment(row, a.n_vars);
    if (!(evaluate_word(a, bits) == evaluate_word(b, bits))) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("canonical cascade for n = 2 matches the expanded two-variable form") {
  const auto word = canonical_cascade(symbolic_spectrum(2), DihedralParams(3));
  CHECK(to_string(word) == "a^1 g[x2] a^2 g[x2] g[x1] a^3 g[x2] a^4 g[x2] g[x1]");
  CHECK(word.letters.size() == 10);
}

TEST_CASE("canonical cascade base case n = 1") {
  const auto word = canonical_cascade(symbolic_spectrum(1), DihedralParams(3));
  CHECK(to_string(word) == "a^1 g[x1] a^2 g[x1]");
  CHECK(word.letters.size() == 4);
}

TEST_CASE("canonical schedule equals the recursive expansion") {
  for (unsigned n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(shape(canonical_cascade(symbolic_spectrum(n), DihedralParams(3))) == expand(1, n));
  }
  // Block sizes for n = 3 over k = 1..8.
  const auto word = canonical_cascade(symbolic_spectrum(3), DihedralParams(3));
  std::vector<int> blocks;
  for (const auto& letter : word.letters) {
    if (std::holds_alternative<Rot>(letter)) {
      blocks.push_back(0);
    } else {
      ++blocks.back();
    }
  }
  CHECK(blocks == std::vector<int>{1, 2, 1, 3, 1, 2, 1, 3});
  CHECK(word.letters.size() == 22);
}

TEST_CASE("canonical length law and alternation for n = 1..10") {
  for (unsigned n = 1; n <= 10; ++n) {
    CAPTURE(n);
    const auto word = canonical_cascade(symbolic_spectrum(n), DihedralParams(3));
    CHECK(word.letters.size() == 3 * (std::size_t{1} << n) - 2);
    CHECK(word.rotation_count() == (std::size_t{1} << n));
    REQUIRE(std::holds_alternative<Rot>(word.letters.front()));
    std::size_t run = 0;
    for (std::size_t i = 1; i < word.letters.size(); ++i) {
      if (std::holds_alternative<Rot>(word.letters[i])) {
        CHECK(run >= 1);
        CHECK(run <= n);
        run = 0;
      } else {
        ++run;
      }
    }
    CHECK(run == n);
  }
}

TEST_CASE("canonical cascade rejects mismatched spectra") {
  WalshSpectrum bad{2, {Rational(1), Rational(0), Rational(0)}, std::nullopt};
  CHECK_THROWS_AS(canonical_cascade(bad, DihedralParams(3)), std::invalid_argument);
  const auto mod5 = spectrum_mod(TruthVector::from_digits("0110"), 5);
  CHECK_THROWS_AS(canonical_cascade(mod5, DihedralParams(3)), std::invalid_argument);
}

TEST_CASE("simplify reproduces the XOR cascade") {
  const auto spectrum = spectrum_mod(TruthVector::from_digits("0110"), 3);
  const auto canonical = canonical_cascade(spectrum, DihedralParams(3));
  const auto simplified = simplify(canonical);
  CHECK(to_string(simplified) == "a^-1 g[x1,x2] a^1 g[x1,x2]");
  CHECK(simplified.letters.size() == 4);

  const auto exact = simplify(canonical_cascade(spectrum_exact(TruthVector::from_digits("0110")), DihedralParams(3)));
  CHECK(to_string(exact) == "a^1/2 g[x1,x2] a^-1/2 g[x1,x2]");
}

TEST_CASE("simplify of an all-zero spectrum is empty") {
  const auto word = canonical_cascade(spectrum_exact(TruthVector::from_digits("00000000")), DihedralParams(3));
  CHECK(simplify(word).letters.empty());
}

TEST_CASE("simplify applies each rule") {
  CascadeWord w;
  w.mode = Mode::Eqb;
  w.n_vars = 3;
  const auto x1 = VarSet::single(1);
  const auto x2 = VarSet::single(2);
  w.letters = {Rot{make_rational(1, 4)}, Rot{make_rational(-1, 4)}, Refl{x1}, Refl{x2}, Rot{Rational(0)},
               Refl{x2}, Rot{make_rational(1, 2)}, Rot{make_rational(1, 8)}};
  // R3 cancels the first pair, R1 drops a^0, R2 folds g[x1] g[x2] g[x2] to g[x1].
  CHECK(to_string(simplify(w)) == "g[x1] a^5/8");

  CascadeWord m;
  m.params = DihedralParams(3);
  m.mode = Mode::Mgd;
  m.n_vars = 1;
  m.letters = {Rot{Rational(2)}, Rot{Rational(1)}, Refl{x1}, Rot{Rational(4)}, Refl{x1}};
  // a^2 a^1 = a^3 = I in D3; a^4 normalizes to a^1.
  CHECK(to_string(simplify(m)) == "g[x1] a^1 g[x1]");
}

TEST_CASE("simplify preserves semantics and is idempotent on random words") {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> exponent(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(trial % 4);
    std::uniform_int_distribution<std::uint64_t> controls(0, (std::uint64_t{1} << n) - 1);
    const bool mgd = trial % 2 == 0;
    CascadeWord w;
    w.params = DihedralParams(mgd ? 5 : 2);
    w.mode = mgd ? Mode::Mgd : Mode::Eqb;
    w.n_vars = n;
    for (int i = 0; i < 40; ++i) {
      if (kind(rng()) == 0) {
        w.letters.emplace_back(Rot{mgd ? Rational(exponent(rng())) : make_rational(exponent(rng()), 4)});
      } else {
        w.letters.emplace_back(Refl{VarSet(controls(rng()))});
      }
    }
    const auto s = simplify(w);
    CHECK(same_on_all_rows(w, s));
    CHECK(simplify(s) == s);
    for (std::size_t i = 0; i + 1 < s.letters.size(); ++i) {
      CHECK(s.letters[i].index() != s.letters[i + 1].index());
    }
  }
}

TEST_CASE("simplify preserves semantics on random spectra in both modes") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto exact = canonical_cascade(spectrum_exact(random_truth(n)), DihedralParams(3));
      CHECK(same_on_all_rows(exact, simplify(exact)));
      CHECK(simplify(simplify(exact)) == simplify(exact));
      const auto mgd = canonical_cascade(spectrum_mod(random_truth(n, 5), 5), DihedralParams(5));
      CHECK(same_on_all_rows(mgd, simplify(mgd)));
      CHECK(simplify(simplify(mgd)) == simplify(mgd));
    }
  }
}

TEST_CASE("detect_symmetry examples") {
  CHECK(detect_symmetry(TruthVector::from_digits("0110")));
  CHECK_FALSE(detect_symmetry(TruthVector::from_digits("0001")));
  CHECK(detect_symmetry(TruthVector::from_digits("0101")));
  CHECK_FALSE(detect_symmetry(TruthVector::from_digits("0000")));
}

TEST_CASE("detect_symmetry matches brute force over all functions of n <= 4") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << (std::uint64_t{1} << n)); ++f) {
      const auto truth = boolean_function(n, f);
      bool odd = true;
      for (std::uint64_t hat = 0; hat < (std::uint64_t{1} << (n - 1)); ++hat) {
        odd = odd && truth[2 * hat] == 1 - truth[2 * hat + 1];
      }
      CHECK(detect_symmetry(truth) == odd);
    }
  }
}

TEST_CASE("reduce_by_symmetry examples") {
  const DihedralParams d3(3);
  const auto xor2 = reduce_by_symmetry(TruthVector::from_digits("0110"), d3);
  CHECK(to_string(xor2) == "a^1/2 g[x1] a^-1/2 g[x1]");
  CHECK(xor2.target_var == 2u);
  CHECK(xor2.n_vars == 2);

  const auto x2 = reduce_by_symmetry(TruthVector::from_digits("0101"), d3);
  CHECK(x2.letters.empty());
  CHECK(x2.target_var == 2u);

  const auto xnor = reduce_by_symmetry(TruthVector::from_digits("1001"), d3);
  CHECK(to_string(xnor) == "a^1/2 g[x1] a^1/2 g[x1]");

  const auto not1 = reduce_by_symmetry(TruthVector::from_digits("10"), d3);
  CHECK(to_string(not1) == "a^1");
  CHECK(not1.target_var == 1u);

  CHECK_THROWS_AS(reduce_by_symmetry(TruthVector::from_digits("0001"), d3), std::invalid_argument);
}

TEST_CASE("symmetry reduction is exact and shorter for every odd function, n <= 4") {
  const DihedralParams d3(3);
  for (unsigned n = 1; n <= 4; ++n) {
    for (std::uint64_t h = 0; h < (std::uint64_t{1} << (std::uint64_t{1} << (n - 1))); ++h) {
      const auto truth = odd_in_last(n, h);
      REQUIRE(detect_symmetry(truth));
      const auto reduced = reduce_by_symmetry(truth, d3);
      const auto full = simplify(canonical_cascade(spectrum_exact(truth), d3));
      CHECK(reduced.letters.size() <= full.letters.size());
      CHECK(reduced.element_count() < full.element_count());
      for (std::uint64_t row = 0; row < truth.size(); ++row) {
        const auto bits = row_assignment(row, n);
        const auto value = evaluate_word(reduced, bits);
        CHECK_FALSE(value.reflection);
        // x_n xor h must rebuild f.
        const std::int64_t rebuilt = value.rotation.get_num().get_si() ^ bits[n - 1];
        CHECK(is_integer(value.rotation));
        CHECK(rebuilt == truth[row]);
      }
      CHECK(verify_classical(reduced, truth).passed());
    }
  }
}

TEST_CASE("verify_classical examples") {
  const DihedralParams d3(3);
  const auto truth = TruthVector::from_digits("0110");
  const auto word = simplify(canonical_cascade(spectrum_mod(truth, 3), d3));
  const auto report = verify_classical(word, truth);
  CHECK(report.rows.size() == 4);
  CHECK(report.passed());

  CascadeWord empty;
  empty.n_vars = 1;
  CHECK(verify_classical(empty, TruthVector::from_digits("00")).passed());

  const auto failing = verify_classical(word, TruthVector::from_digits("0111"));
  CHECK_FALSE(failing.passed());
  CHECK(failing.failing_rows() == std::vector<std::uint64_t>{3});
  CHECK(failing.rows[3].expected == "a^1");
  CHECK(failing.rows[3].actual == "I");

  CHECK_THROWS_AS(verify_classical(word, TruthVector::from_digits("01")), std::invalid_argument);
}

TEST_CASE("full pipeline soundness: all two-variable functions and random functions") {
  const DihedralParams d3(3);
  for (std::uint64_t f = 0; f < 16; ++f) {
    const auto truth = boolean_function(2, f);
    CHECK(verify_classical(simplify(canonical_cascade(spectrum_exact(truth), d3)), truth).passed());
    CHECK(verify_classical(simplify(canonical_cascade(spectrum_mod(truth, 3), d3)), truth).passed());
  }
  for (unsigned n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto truth = random_truth(n);
      CHECK(verify_classical(simplify(canonical_cascade(spectrum_exact(truth), d3)), truth).passed());
    }
  }
  for (const std::int64_t p : {3, 5, 7}) {
    for (unsigned n = 1; n <= 4; ++n) {
      const auto truth = random_truth(n, p);
      const DihedralParams dp(p);
      CHECK(verify_classical(simplify(canonical_cascade(spectrum_mod(truth, p), dp)), truth).passed());
      CHECK(verify_classical(canonical_cascade(spectrum_mod(truth, 3 * p), dp), truth).passed());
    }
  }
}
