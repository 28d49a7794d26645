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
#include <stdexcept>

#include <gtest/gtest.h>

#include "gqbp/program.hpp"
#include "gqbp/programs.hpp"
#include "gqbp/simulate.hpp"
#include "oracles.hpp"

namespace gqbp {
namespace {

constexpr double kPi = std::numbers::pi;

Matrix hadamard_like() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2);
  m << r, r, r, -r;
  return m;
}

TEST(InputString, ParseAndPrint) {
  const InputString x = InputString::parse("0110");
  EXPECT_EQ(x.size(), 4u);
  EXPECT_EQ(x[1], 1);
  EXPECT_EQ(x[3], 0);
  EXPECT_EQ(x.weight(), 2u);
  EXPECT_EQ(x.to_string(), "0110");
  EXPECT_EQ(x.read(7), 0);
  EXPECT_THROW(InputString::parse("01a"), std::invalid_argument);
}

TEST(InputString, UnitAndIndex) {
  EXPECT_EQ(InputString::unit(4, 2).to_string(), "0010");
  EXPECT_EQ(InputString::zeros(3).to_string(), "000");
  EXPECT_EQ(InputString::from_index(4, 5).to_string(), "0101");
  EXPECT_EQ(InputString::parse("10").with_bit(1, 1).to_string(), "11");
}

TEST(InputString, AllInputsMatchesEnumeration) {
  const auto inputs = all_inputs(5);
  const auto strings = oracle::all_strings(5);
  ASSERT_EQ(inputs.size(), strings.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) EXPECT_EQ(inputs[i].to_string(), strings[i]);
}

TEST(Bits, CeilLog2) {
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(2), 1);
  EXPECT_EQ(ceil_log2(3), 2);
  EXPECT_EQ(ceil_log2(8), 3);
  EXPECT_EQ(ceil_log2(9), 4);
  EXPECT_TRUE(is_power_of_two(16));
  EXPECT_FALSE(is_power_of_two(12));
}

TEST(ValidateRestricted, IdentityPasses) {
  const RestrictedLevel level{{0, 1}, Matrix::Identity(2, 2), {0.0, 0.0}};
  const ValidationReport r = validate_restricted(level);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.max_deviation, 1e-15);
}

TEST(ValidateRestricted, ParityFinalLevelPasses) {
  const RestrictedLevel level{{0, 1}, hadamard_like(), {kPi, kPi}};
  EXPECT_TRUE(validate_restricted(level).pass);
}

TEST(ValidateRestricted, UnnormalizedColumnFails) {
  Matrix base = Matrix::Identity(2, 2);
  base(1, 0) = 1.0;  // column 0 = (1, 1)
  const ValidationReport r = validate_restricted(RestrictedLevel{{0, 0}, base, {0.0, 0.0}});
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(r.max_deviation, 1.0, 1e-12);
}

TEST(ValidateRestricted, DimensionMismatchThrows) {
  const RestrictedLevel level{{0}, Matrix::Identity(2, 2), {0.0, 0.0}};
  EXPECT_THROW(validate_restricted(level), std::invalid_argument);
  EXPECT_THROW(validate_restricted(RestrictedLevel{{0, 0}, Matrix::Identity(2, 2), {0, 0}}, 0.0),
               std::invalid_argument);
}

TEST(ValidateGeneral, IdentityBothBranches) {
  const GeneralLevel level{{0, 1}, Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
  const ValidationReport r = validate_general(level);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.assignments_checked, 4u);
  EXPECT_FALSE(r.interpretation.empty());
}

TEST(ValidateGeneral, RepeatedLabelPhaseDiagonal) {
  const GeneralLevel level{{0, 0}, Matrix::Identity(2, 2), -Matrix::Identity(2, 2)};
  const ValidationReport r = validate_general(level);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.assignments_checked, 2u);
}

TEST(ValidateGeneral, AllOnesFailsOnBothSet) {
  const GeneralLevel level{{0, 1}, Matrix::Identity(2, 2), Matrix::Ones(2, 2)};
  const ValidationReport r = validate_general(level);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.failing_assignment, (std::vector<int>{0, 1}));
  // first failing mask is (0,1); (1,1) fails too
  Matrix both(2, 2);
  both.col(0) = level.a1.col(0);
  both.col(1) = level.a1.col(1);
  EXPECT_GT(unitarity_deviation(both), 1e-9);
}

TEST(ValidateGeneral, TooManyDistinctLabelsThrows) {
  const GeneralLevel level{{0, 1, 2}, Matrix::Identity(3, 3), Matrix::Identity(3, 3)};
  try {
    validate_general(level, 1e-9, 2);
    FAIL() << "expected a refusal";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("d = 3"), std::string::npos);
  }
}

Program two_node_general(Matrix a0, Matrix a1) {
  Program p;
  p.n = 2;
  p.width = 2;
  p.initial = Vector::Unit(2, 0);
  p.levels = GeneralLevels{GeneralLevel{{0, 1}, std::move(a0), std::move(a1)}};
  p.accept = {0};
  return p;
}

TEST(Restrict, NegatedBranchGivesPi) {
  const Program r = restrict(two_node_general(hadamard_like(), -hadamard_like()));
  for (double t : r.restricted_levels()[0].thetas) EXPECT_NEAR(std::abs(t), kPi, 1e-12);
}

TEST(Restrict, ParityAsGeneralGivesPi) {
  const Program g = generalize(parity_program(4));
  const Program r = restrict(g);
  for (const auto& level : r.restricted_levels()) {
    for (double t : level.thetas) EXPECT_NEAR(std::abs(t), kPi, 1e-12);
  }
}

TEST(Restrict, NonPhaseRelatedThrows) {
  Matrix a1(2, 2);
  a1 << 0, 1, 1, 0;
  try {
    restrict(two_node_general(Matrix::Identity(2, 2), a1));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("level 0 node 0"), std::string::npos);
  }
}

TEST(Generalize, ZeroAndPiThetas) {
  Program p = parity_program(2);
  const Program g = generalize(p);
  const auto& level = g.general_levels()[0];
  EXPECT_LE((level.a1 + level.a0).cwiseAbs().maxCoeff(), 1e-12);

  auto& r = std::get<RestrictedLevels>(p.levels)[0];
  r.thetas = {0.0, 0.0};
  const Program h = generalize(p);
  const auto& same = h.general_levels()[0];
  EXPECT_LE((same.a1 - same.a0).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Generalize, RoundtripPreservesTransitions) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Program p = random_rgqbp(3, 3, 4, seed);
    const Program back = restrict(generalize(p));
    for (const InputString& x : all_inputs(4)) {
      for (std::size_t t = 0; t < p.length(); ++t) {
        const Matrix a = transition_matrix(p.restricted_levels()[t], x);
        const Matrix b = transition_matrix(back.restricted_levels()[t], x);
        EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-12);
      }
    }
  }
}

TEST(Generalize, OutputIsWellBehaved) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Program g = generalize(random_rgqbp(4, 2, 3, seed));
    for (const auto& level : g.general_levels()) EXPECT_TRUE(validate_general(level).pass);
  }
}

TEST(Properties, RestrictedTransitionIsUnitaryOnEveryInput) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Program p = random_rgqbp(5, 2, 4, seed);
    for (const auto& level : p.restricted_levels()) {
      ASSERT_TRUE(validate_restricted(level).pass);
      for (const InputString& x : all_inputs(4)) {
        EXPECT_LE(unitarity_deviation(transition_matrix(level, x)), 10 * kDefaultTol);
      }
    }
  }
}

TEST(CheckProgram, RejectsStructuralErrors) {
  Program p = parity_program(2);
  EXPECT_NO_THROW(check_program(p));
  Program bad_accept = p;
  bad_accept.accept = {2};
  EXPECT_THROW(check_program(bad_accept), std::invalid_argument);
  Program bad_label = p;
  std::get<RestrictedLevels>(bad_label.levels)[0].labels[0] = 5;
  EXPECT_THROW(check_program(bad_label), std::invalid_argument);
  Program bad_norm = p;
  bad_norm.initial *= 2.0;
  EXPECT_THROW(check_program(bad_norm), std::invalid_argument);
  EXPECT_THROW(p.general_levels(), std::invalid_argument);
}

TEST(ValidateProgram, ReportsPerLevel) {
  const ProgramValidation v = validate_program(parity_program(6));
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.levels.size(), 3u);
  Program broken = parity_program(2);
  broken.width = 3;
  EXPECT_FALSE(validate_program(broken).structural_error.empty());
}

TEST(PadLevel, AddsDummyNodes) {
  const RestrictedLevel padded = pad_level(RestrictedLevel{{1}, Matrix::Identity(1, 1), {0.5}}, 3);
  EXPECT_EQ(padded.labels, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(padded.thetas, (std::vector<double>{0.5, 0.0, 0.0}));
  EXPECT_TRUE(padded.base.isIdentity());
}

}  // namespace
}  // namespace gqbp
