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

#include "gqbp/simulate.hpp"

#include <random>
#include <stdexcept>

namespace gqbp {

namespace {

void check_input(const Program& program, const InputString& x) {
  if (static_cast<int>(x.size()) != program.n) {
    throw std::invalid_argument("input has length " + std::to_string(x.size()) +
                                ", program expects n = " + std::to_string(program.n));
  }
}

double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int draw(const Vector& state, std::mt19937_64& rng) {
  const double total = state.squaredNorm();
  const double u = uniform53(rng) * total;
  double cumulative = 0.0;
  int last_nonzero = 0;
  for (Eigen::Index v = 0; v < state.size(); ++v) {
    const double p = std::norm(state[v]);
    if (p > 0.0) last_nonzero = static_cast<int>(v);
    cumulative += p;
    if (u < cumulative) return static_cast<int>(v);
  }
  return last_nonzero;
}

}  // namespace

Matrix transition_matrix(const GeneralLevel& level, const InputString& x) {
  Matrix m(level.a0.rows(), level.a0.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const int bit = x.read(static_cast<std::uint64_t>(level.labels[j]));
    m.col(j) = bit ? level.a1.col(j) : level.a0.col(j);
  }
  return m;
}

Matrix transition_matrix(const RestrictedLevel& level, const InputString& x) {
  Matrix m = level.base;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (x.read(static_cast<std::uint64_t>(level.labels[j]))) {
      m.col(j) *= std::polar(1.0, level.thetas[static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

void apply_level(const GeneralLevel& level, const InputString& x, Vector& state) {
  Vector next = Vector::Zero(state.size());
  for (Eigen::Index j = 0; j < state.size(); ++j) {
    if (state[j] == Amplitude{}) continue;
    const int bit = x.read(static_cast<std::uint64_t>(level.labels[j]));
    next += state[j] * (bit ? level.a1.col(j) : level.a0.col(j));
  }
  state = std::move(next);
}

void apply_level(const RestrictedLevel& level, const InputString& x, Vector& state) {
  Vector phased = state;
  for (Eigen::Index j = 0; j < phased.size(); ++j) {
    if (x.read(static_cast<std::uint64_t>(level.labels[j]))) {
      phased[j] *= std::polar(1.0, level.thetas[static_cast<std::size_t>(j)]);
    }
  }
  state.noalias() = level.base * phased;
}

RunTrace run(const Program& program, const InputString& x) {
  check_input(program, x);
  RunTrace trace;
  trace.states.reserve(program.length() + 1);
  trace.states.push_back(program.initial);
  std::visit(
      [&](const auto& levels) {
        for (const auto& level : levels) {
          Vector next = trace.states.back();
          apply_level(level, x, next);
          trace.states.push_back(std::move(next));
        }
      },
      program.levels);
  return trace;
}

Vector final_state(const Program& program, const InputString& x) {
  check_input(program, x);
  Vector state = program.initial;
  std::visit(
      [&](const auto& levels) {
        for (const auto& level : levels) apply_level(level, x, state);
      },
      program.levels);
  return state;
}

double accept_mass(const Vector& state, std::span<const int> accept) {
  double p = 0.0;
  for (int v : accept) p += std::norm(state[v]);
  return p;
}

double acceptance_probability(const Program& program, const InputString& x) {
  return accept_mass(final_state(program, x), program.accept);
}

std::string_view to_string(Decision decision) {
  switch (decision) {
    case Decision::accept: return "accept";
    case Decision::reject: return "reject";
    case Decision::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Decision decide(double probability, double threshold) {
  if (!(threshold > 0.5 && threshold <= 1.0)) {
    throw std::invalid_argument("decision threshold must lie in (1/2, 1]");
  }
  if (probability >= threshold) return Decision::accept;
  if (probability <= 1.0 - threshold) return Decision::reject;
  return Decision::inconclusive;
}

Decision decide(const Program& program, const InputString& x, double threshold) {
  return decide(acceptance_probability(program, x), threshold);
}

int sample_measurement(const Program& program, const InputString& x, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return draw(final_state(program, x), rng);
}

std::vector<int> sample_measurements(const Program& program, const InputString& x,
                                     std::uint64_t seed, std::size_t count) {
  const Vector state = final_state(program, x);
  std::mt19937_64 rng(seed);
  std::vector<int> out(count);
  for (int& v : out) v = draw(state, rng);
  return out;
}

}  // namespace gqbp
