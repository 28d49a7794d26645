// Copyright 2026 The gqbp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "gqbp/convert.hpp"
#include "gqbp/experiments.hpp"
#include "gqbp/programs.hpp"
#include "gqbp/simulate.hpp"
#include "gqbp/transform.hpp"

namespace {

using namespace gqbp;

InputString random_input(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
  return InputString(bits);
}

void BM_ProgramRun(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const Program p = random_rgqbp(s, 16, 16, 1);
  const InputString x = random_input(16, 2);
  for (auto _ : state) benchmark::DoNotOptimize(acceptance_probability(p, x));
  state.SetComplexityN(s);
}
BENCHMARK(BM_ProgramRun)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_SplitLayers(benchmark::State& state) {
  const Program p = random_rgqbp(static_cast<int>(state.range(0)), 16, 16, 3);
  for (auto _ : state) benchmark::DoNotOptimize(split_layers(p));
}
BENCHMARK(BM_SplitLayers)->RangeMultiplier(4)->Range(2, 64);

void BM_GroverCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QueryCircuit c = grover_promise_or(n);
  const CircuitSimulator sim(c);
  const InputString x = InputString::unit(static_cast<std::size_t>(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sim.acceptance(x));
}
BENCHMARK(BM_GroverCircuit)->RangeMultiplier(4)->Range(4, 256);

void BM_CircuitToProgram(benchmark::State& state) {
  const QueryCircuit c = grover_promise_or(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(circuit_to_rgqbp(c));
}
BENCHMARK(BM_CircuitToProgram)->RangeMultiplier(4)->Range(4, 64);

void BM_ProgramToCircuit(benchmark::State& state) {
  const Program p = random_rgqbp(static_cast<int>(state.range(0)), 8, 8, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rgqbp_to_circuit(p));
}
BENCHMARK(BM_ProgramToCircuit)->RangeMultiplier(2)->Range(2, 16);

void BM_HaarUnitary(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(haar_unitary(d, rng));
}
BENCHMARK(BM_HaarUnitary)->RangeMultiplier(2)->Range(2, 64);

void BM_PromiseOrExpectation(benchmark::State& state) {
  const Program p = random_rgqbp(8, 8, static_cast<int>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(promise_or_expectation(p));
}
BENCHMARK(BM_PromiseOrExpectation)->RangeMultiplier(2)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
