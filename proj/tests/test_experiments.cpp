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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "gqbp/convert.hpp"
#include "gqbp/experiments.hpp"
#include "gqbp/simulate.hpp"
#include "gqbp/transform.hpp"
#include "oracles.hpp"

namespace gqbp {
namespace {

Program single_node(int n, double theta) {
  Program p;
  p.n = n;
  p.width = 1;
  p.initial = Vector::Ones(1);
  p.levels = RestrictedLevels{RestrictedLevel{{0}, Matrix::Identity(1, 1), {theta}}};
  p.accept = {0};
  return p;
}

Program input_independent(int s, int len, int n, std::uint64_t seed) {
  Program p = random_rgqbp(s, len, n, seed);
  for (auto& l : std::get<RestrictedLevels>(p.levels)) {
    l.thetas.assign(static_cast<std::size_t>(s), 0.0);
    l.labels.assign(static_cast<std::size_t>(s), 0);
  }
  return p;
}

InputString random_input(int n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
  return InputString(bits);
}

/// The hybrid state recomputed level by level from the edge oracle on the
/// split program: level 2t reads x for t < L - k and y afterwards.
std::vector<Amplitude> hybrid_oracle(const Program& p, const std::string& x,
                                     const std::string& y, std::size_t k) {
  const Program s = split_layers(p);
  const auto& levels = s.restricted_levels();
  const std::size_t queries = levels.size() / 2;
  Program prefix = s;
  std::vector<Amplitude> psi(s.initial.data(), s.initial.data() + s.initial.size());
  for (std::size_t t = 0; t < levels.size(); ++t) {
    prefix.initial = Eigen::Map<Vector>(psi.data(), static_cast<Eigen::Index>(psi.size()));
    prefix.levels = RestrictedLevels{levels[t]};
    const bool alt = t % 2 == 0 && t / 2 >= queries - k;
    psi = oracle::evolve(prefix, alt ? y : x);
  }
  return psi;
}

TEST(HybridRun, Boundaries) {
  std::mt19937_64 rng(1);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Program p = random_rgqbp(4, 4, 5, seed);
    const InputString x = random_input(5, rng);
    const InputString y = random_input(5, rng);
    EXPECT_LE((hybrid_run(p, x, y, 0) - final_state(p, x)).norm(), 1e-12);
    EXPECT_LE((hybrid_run(p, x, y, 4) - final_state(p, y)).norm(), 1e-12);
    EXPECT_THROW(hybrid_run(p, x, y, 5), std::out_of_range);
  }
}

TEST(HybridRun, MatchesOracleAtEverySwitchPoint) {
  std::mt19937_64 rng(2);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Program p = random_rgqbp(3, 3, 4, seed);
    const InputString x = random_input(4, rng);
    const InputString y = random_input(4, rng);
    for (std::size_t k = 0; k <= 3; ++k) {
      const Vector got = hybrid_run(p, x, y, k);
      const auto want = hybrid_oracle(p, x.to_string(), y.to_string(), k);
      for (Eigen::Index i = 0; i < got.size(); ++i) {
        EXPECT_LE(std::abs(got[i] - want[static_cast<std::size_t>(i)]), 1e-12);
      }
    }
  }
}

TEST(HybridRun, InputIndependentProgram) {
  const Program p = input_independent(3, 3, 3, 5);
  const Vector ref = final_state(p, InputString::zeros(3));
  for (std::size_t k = 0; k <= 3; ++k) {
    EXPECT_LE((hybrid_run(p, InputString::parse("101"), InputString::parse("011"), k) - ref).norm(),
              1e-12);
  }
}

TEST(HybridDeviation, EqualInputs) {
  const Program p = random_rgqbp(4, 3, 3, 1);
  const InputString x = InputString::parse("101");
  const HybridTrace t = hybrid_deviation(p, x, x);
  EXPECT_EQ(t.final_distance, 0.0);
  EXPECT_EQ(t.bound_term, 0.0);
  EXPECT_TRUE(t.pass);
}

TEST(HybridDeviation, SingleNodeTight) {
  const Program p = single_node(3, std::numbers::pi);
  const HybridTrace t = hybrid_deviation(p, InputString::parse("000"), InputString::parse("100"));
  EXPECT_NEAR(t.final_distance, 2.0, 1e-12);
  EXPECT_NEAR(t.bound_term, 2.0, 1e-12);
  EXPECT_TRUE(t.pass);
  EXPECT_EQ(t.delta_nodes[0], (std::vector<int>{0}));
}

TEST(HybridDeviation, TermsMatchHandSum) {
  const Program p = random_rgqbp(4, 3, 4, 12);
  const InputString x = InputString::parse("0110");
  const InputString y = InputString::parse("1100");
  const HybridTrace t = hybrid_deviation(p, x, y);
  const Program s = split_layers(p);
  const RunTrace run_x = run(s, x);
  double total = 0.0;
  for (std::size_t lvl = 0; lvl < 3; ++lvl) {
    const auto& level = s.restricted_levels()[2 * lvl];
    const Vector& alpha = run_x.states[2 * lvl];
    double term = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      const auto label = static_cast<std::size_t>(level.labels[j]);
      if (x[label] != y[label]) term += 2.0 * std::abs(alpha[static_cast<Eigen::Index>(j)]);
    }
    EXPECT_NEAR(t.deviations[lvl], term, 1e-12);
    total += term;
  }
  EXPECT_NEAR(t.bound_term, total, 1e-12);
}

TEST(Properties, HybridTelescoping) {
  std::mt19937_64 rng(31);
  int cases = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const int s = 1 + static_cast<int>(seed % 8);
    const int len = 1 + static_cast<int>((seed / 2) % 8);
    const int n = 1 + static_cast<int>((seed / 3) % 8);
    const Program p = random_rgqbp(s, len, n, seed);
    const InputString x = random_input(n, rng);
    const InputString y = random_input(n, rng);
    const HybridTrace t = hybrid_deviation(p, x, y);
    const double d = oracle::distance(oracle::evolve(p, x.to_string()), oracle::evolve(p, y.to_string()));
    EXPECT_NEAR(t.final_distance, d, 1e-12);
    EXPECT_LE(t.final_distance, t.bound_term + 1e-9);
    EXPECT_TRUE(t.pass);
    EXPECT_TRUE(t.cauchy_schwarz_ok);
    for (double l1 : t.level_l1) EXPECT_LE(l1, std::sqrt(static_cast<double>(s)) + 1e-9);
    ++cases;
  }
  EXPECT_GE(cases, 100);
}

TEST(PromiseOr, InputIndependent) {
  const ExperimentReport r = promise_or_expectation(input_independent(4, 3, 5, 1));
  EXPECT_NEAR(r.empirical, 0.0, 1e-12);
  EXPECT_TRUE(r.pass);
}

TEST(PromiseOr, SingleNodeHandValues) {
  const ExperimentReport r = promise_or_expectation(single_node(4, std::numbers::pi));
  EXPECT_NEAR(r.empirical, 0.5, 1e-12);
  EXPECT_NEAR(r.bound, 1.0, 1e-12);
  EXPECT_NEAR(r.slack, 0.5, 1e-12);
  EXPECT_TRUE(r.pass);
}

TEST(PromiseOr, GroverSixteen) {
  const ExperimentReport r = promise_or_expectation(circuit_to_rgqbp(grover_promise_or(16)));
  EXPECT_TRUE(r.pass);
  EXPECT_GE(r.empirical, kDistanceFloor);
  EXPECT_TRUE(r.cauchy_schwarz_ok);
}

TEST(PromiseOr, EmpiricalMatchesOracle) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Program p = random_rgqbp(4, 3, 5, seed);
    double total = 0.0;
    const auto zero = oracle::evolve(p, "00000");
    for (int q = 0; q < 5; ++q) {
      std::string unit(5, '0');
      unit[static_cast<std::size_t>(q)] = '1';
      total += oracle::distance(zero, oracle::evolve(p, unit));
    }
    const ExperimentReport r = promise_or_expectation(p);
    EXPECT_NEAR(r.empirical, total / 5, 1e-12);
    EXPECT_NEAR(r.bound, 2.0 * 4 * 2.0 / 5, 1e-12);
  }
}

TEST(Hamming, DeltaZero) {
  const ExperimentReport r =
      hamming_expectation(random_rgqbp(3, 2, 4, 1), 2, 0, InputString::parse("0110"));
  EXPECT_EQ(r.empirical, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(Hamming, InputIndependentBound) {
  const Program p = input_independent(4, 3, 4, 3);
  const ExperimentReport r = hamming_expectation(p, 1, 1, InputString::parse("1000"));
  EXPECT_NEAR(r.empirical, 0.0, 1e-12);
  EXPECT_NEAR(r.bound, 2.0 * 4 * 2.0 / 3, 1e-12);
  EXPECT_TRUE(r.pass);
}

TEST(Hamming, RandomProgramsBothSides) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Program p = random_rgqbp(4, 4, 8, seed);
    const ExperimentReport yes = hamming_expectation(p, 2, 1, InputString::parse("11000000"));
    EXPECT_TRUE(yes.pass);
    EXPECT_NEAR(yes.bound, 2.0 * 5 * 1 * 2.0 / 6, 1e-12);
    const ExperimentReport no = hamming_expectation(p, 2, 1, InputString::parse("11100000"));
    EXPECT_TRUE(no.pass);
    EXPECT_NEAR(no.bound, 2.0 * 5 * 1 * 2.0 / 2, 1e-12);
  }
}

TEST(Hamming, EmpiricalMatchesOracle) {
  const Program p = random_rgqbp(3, 3, 6, 4);
  const std::string fixed = "101000";
  const auto ref = oracle::evolve(p, fixed);
  const auto members = oracle::hamming_members(fixed, 2, 2);
  double total = 0.0;
  for (const auto& y : members) total += oracle::distance(ref, oracle::evolve(p, y));
  const ExperimentReport r = hamming_expectation(p, 2, 2, InputString::parse(fixed));
  EXPECT_NEAR(r.empirical, total / static_cast<double>(members.size()), 1e-12);
}

TEST(Hamming, SamplingMode) {
  const Program p = random_rgqbp(2, 2, 8, 6);
  SamplingOptions options;
  options.exhaustive_limit = 5;
  options.sample_size = 40;
  const ExperimentReport r = hamming_expectation(p, 2, 2, InputString::parse("11000000"), options);
  bool sampled = false;
  for (const auto& [k, v] : r.metadata) {
    if (k == "mode") sampled = v == "sampled";
    if (k == "sample_size") EXPECT_EQ(v, "40");
  }
  EXPECT_TRUE(sampled);
  EXPECT_TRUE(r.pass);
}

TEST(Distinguishability, ParityFour) {
  const Program p = parity_program(4);
  std::vector<InputString> yes;
  std::vector<InputString> no;
  for (const InputString& x : all_inputs(4)) (x.weight() % 2 ? yes : no).push_back(x);
  const DistinguishabilityReport r = distinguishability_check(p, yes, no);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.pairs_checked, 64u);
  EXPECT_EQ(r.gap_pairs, 64u);
  EXPECT_GE(r.min_gap_distance, 0.5);
}

TEST(Distinguishability, EmptyAcceptFails) {
  Program p = parity_program(2);
  p.accept = {};
  const std::vector<InputString> yes{InputString::parse("10")};
  const std::vector<InputString> no{InputString::parse("00")};
  const DistinguishabilityReport r = distinguishability_check(p, yes, no);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.decision_failures, 1u);
}

TEST(Distinguishability, GroverFour) {
  const Program p = circuit_to_rgqbp(grover_promise_or(4));
  const auto inputs = promise_or_inputs(4);
  const std::vector<InputString> no{inputs.front()};
  const std::vector<InputString> yes(inputs.begin() + 1, inputs.end());
  EXPECT_TRUE(distinguishability_check(p, yes, no).pass);
}

TEST(Tradeoff, ParityRatio) {
  const std::vector<int> sizes{2, 4, 8};
  for (const TradeoffRow& r : tradeoff_scan(parity_family(), sizes)) {
    EXPECT_EQ(r.s, 2);
    EXPECT_EQ(r.length, static_cast<std::size_t>(r.n / 2));
    EXPECT_NEAR(r.ratio, 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(r.min_success, 1.0, 1e-9);
  }
}

TEST(Tradeoff, GroverRatio) {
  const std::vector<int> sizes{4, 16};
  for (const TradeoffRow& r : tradeoff_scan(grover_or_family(), sizes)) {
    EXPECT_EQ(r.s, 2 * r.n);
    EXPECT_EQ(r.length, static_cast<std::size_t>(grover_iterations(r.n) + 1));
    EXPECT_LE(r.ratio, 2.0);
    EXPECT_GE(r.min_success, kTwoThirds);
  }
}

}  // namespace
}  // namespace gqbp
