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

#ifndef GQBP_SIMULATE_HPP
#define GQBP_SIMULATE_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "gqbp/program.hpp"
#include "gqbp/types.hpp"

namespace gqbp {

/// Column j is the a^{x[labels[j]]} column j.
Matrix transition_matrix(const GeneralLevel& level, const InputString& x);
/// Column j is exp(i thetas[j] x[labels[j]]) times base column j.
Matrix transition_matrix(const RestrictedLevel& level, const InputString& x);

/// In-place state update by one level; avoids forming the transition matrix.
void apply_level(const GeneralLevel& level, const InputString& x, Vector& state);
void apply_level(const RestrictedLevel& level, const InputString& x, Vector& state);

/// The states psi_0 .. psi_L of one run.
struct RunTrace {
  std::vector<Vector> states;

  const Vector& final_state() const { return states.back(); }
};

/// Throws std::invalid_argument if |x| != program.n.
RunTrace run(const Program& program, const InputString& x);

/// Same as run(program, x).final_state() without keeping intermediates.
Vector final_state(const Program& program, const InputString& x);

/// Sum of |state[v]|^2 over v in accept.
double accept_mass(const Vector& state, std::span<const int> accept);

double acceptance_probability(const Program& program, const InputString& x);

enum class Decision { accept, reject, inconclusive };

std::string_view to_string(Decision decision);

/// accept if p >= threshold, reject if p <= 1 - threshold. Requires
/// 1/2 < threshold <= 1.
Decision decide(double probability, double threshold = kTwoThirds);
Decision decide(const Program& program, const InputString& x, double threshold = kTwoThirds);

/// Measures the final state in the standard basis. Sampling draws 53-bit
/// uniforms from std::mt19937_64 seeded with `seed` and inverts the
/// cumulative distribution in node order. Reproducible within this
/// implementation; other implementations agree in distribution only.
int sample_measurement(const Program& program, const InputString& x, std::uint64_t seed);

/// `count` successive draws from one generator seeded with `seed`.
std::vector<int> sample_measurements(const Program& program, const InputString& x,
                                     std::uint64_t seed, std::size_t count);

}  // namespace gqbp

#endif  // GQBP_SIMULATE_HPP
