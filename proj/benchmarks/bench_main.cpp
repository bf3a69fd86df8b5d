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

#include <benchmark/benchmark.h>

#include <random>

#include "eqb/cascade.hpp"
#include "eqb/quantum.hpp"
#include "eqb/spectral.hpp"

namespace {

eqb::TruthVector random_truth(unsigned n) {
  std::mt19937_64 gen(n);
  std::vector<std::int64_t> values(std::size_t{1} << n);
  for (auto& v : values) v = static_cast<std::int64_t>(gen() & 1U);
  return {n, std::move(values)};
}

void BM_Fwht(benchmark::State& state) {
  const auto t = random_truth(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eqb::fwht(t.values));
  }
}
BENCHMARK(BM_Fwht)->DenseRange(4, 20, 4);

void BM_SpectrumExact(benchmark::State& state) {
  const auto t = random_truth(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eqb::spectrum_exact(t));
  }
}
BENCHMARK(BM_SpectrumExact)->DenseRange(2, 10, 2);

void BM_CascadeSimplify(benchmark::State& state) {
  const auto w = eqb::spectrum_exact(random_truth(static_cast<unsigned>(state.range(0))));
  const eqb::DihedralParams p{3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eqb::simplify(eqb::canonical_cascade(w, p)));
  }
}
BENCHMARK(BM_CascadeSimplify)->DenseRange(2, 10, 2);

void BM_VerifyQuantum(benchmark::State& state) {
  const auto t = random_truth(static_cast<unsigned>(state.range(0)));
  const auto word = eqb::simplify(eqb::canonical_cascade(eqb::spectrum_exact(t), eqb::DihedralParams{3}));
  const auto circuit = eqb::map_to_circuit(word, eqb::Axis::X);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eqb::verify_quantum(circuit, t));
  }
}
BENCHMARK(BM_VerifyQuantum)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
