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

#include "gqbp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "gqbp/convert.hpp"
#include "gqbp/simulate.hpp"
#include "gqbp/transform.hpp"

namespace gqbp {

namespace {

constexpr double kInequalitySlack = 1e-9;
constexpr const char* kDistanceFloorNote = "1/6 (derived from probability gap 1/3)";

Program alternating_form(const Program& program) {
  if (!program.is_restricted()) {
    throw std::invalid_argument("hybrid experiments require a restricted program");
  }
  return program.alternating ? program : split_layers(program);
}

void check_length(const Program& program, const InputString& x) {
  if (static_cast<int>(x.size()) != program.n) {
    throw std::invalid_argument("input has length " + std::to_string(x.size()) +
                                ", program expects n = " + std::to_string(program.n));
  }
}

/// sum_j |alpha_{j,t}| in front of every query-dependent level of the run
/// on x, for an alternating program.
std::vector<double> level_l1_norms(const Program& alt, const InputString& x) {
  const auto& levels = alt.restricted_levels();
  std::vector<double> out;
  Vector state = alt.initial;
  for (std::size_t t = 0; t + 1 < levels.size(); t += 2) {
    out.push_back(state.cwiseAbs().sum());
    apply_level(levels[t], x, state);
    apply_level(levels[t + 1], x, state);
  }
  return out;
}

void finish(ExperimentReport& report) {
  report.slack = report.bound - report.empirical;
  report.pass = report.slack >= -kVerdictSlack;
}

void record_cauchy_schwarz(ExperimentReport& report, const std::vector<double>& l1, int s) {
  report.max_level_l1 = l1.empty() ? 0.0 : *std::max_element(l1.begin(), l1.end());
  report.cauchy_schwarz_ok = report.max_level_l1 <= std::sqrt(static_cast<double>(s)) + 1e-9;
}

}  // namespace

Vector hybrid_run(const Program& program, const InputString& x_base, const InputString& x_alt,
                  std::size_t k) {
  check_length(program, x_base);
  check_length(program, x_alt);
  const Program alt = alternating_form(program);
  const auto& levels = alt.restricted_levels();
  const std::size_t queries = levels.size() / 2;
  if (k > queries) {
    throw std::out_of_range("hybrid switch point k = " + std::to_string(k) + " exceeds L = " +
                            std::to_string(queries));
  }
  Vector state = alt.initial;
  for (std::size_t t = 0; t < queries; ++t) {
    apply_level(levels[2 * t], t < queries - k ? x_base : x_alt, state);
    apply_level(levels[2 * t + 1], x_base, state);
  }
  return state;
}

HybridTrace hybrid_deviation(const Program& program, const InputString& x, const InputString& y) {
  check_length(program, x);
  check_length(program, y);
  const Program alt = alternating_form(program);
  const auto& levels = alt.restricted_levels();
  const double sqrt_s = std::sqrt(static_cast<double>(alt.width));

  HybridTrace trace;
  Vector state = alt.initial;
  for (std::size_t t = 0; t + 1 < levels.size(); t += 2) {
    const RestrictedLevel& query = levels[t];
    std::vector<int> delta;
    double dev = 0.0;
    for (std::size_t j = 0; j < query.labels.size(); ++j) {
      const auto p = static_cast<std::size_t>(query.labels[j]);
      if (x[p] != y[p]) {
        delta.push_back(static_cast<int>(j));
        dev += std::abs(state[static_cast<Eigen::Index>(j)]);
      }
    }
    const double l1 = state.cwiseAbs().sum();
    trace.cauchy_schwarz_ok = trace.cauchy_schwarz_ok && l1 <= sqrt_s + kInequalitySlack;
    trace.level_l1.push_back(l1);
    trace.alpha.push_back(state);
    trace.delta_nodes.push_back(std::move(delta));
    trace.deviations.push_back(2.0 * dev);
    trace.bound_term += 2.0 * dev;
    apply_level(query, x, state);
    apply_level(levels[t + 1], x, state);
  }
  trace.final_distance = (state - final_state(alt, y)).norm();
  trace.pass = trace.final_distance <= trace.bound_term + kInequalitySlack;
  return trace;
}

ExperimentReport promise_or_expectation(const Program& program) {
  const Program alt = alternating_form(program);
  const int n = program.n;
  const auto length = query_levels(program);
  const Vector base = final_state(alt, InputString::zeros(static_cast<std::size_t>(n)));

  ExperimentReport report;
  report.experiment = "promise-or";
  double total = 0.0;
  for (int p = 0; p < n; ++p) {
    const auto unit = InputString::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(p));
    total += (base - final_state(alt, unit)).norm();
  }
  report.empirical = total / n;
  report.bound = 2.0 * static_cast<double>(length + 1) *
                 std::sqrt(static_cast<double>(program.width)) / n;
  finish(report);
  record_cauchy_schwarz(report, level_l1_norms(alt, InputString::zeros(static_cast<std::size_t>(n))),
                        program.width);
  report.metadata = {{"n", std::to_string(n)},
                     {"s", std::to_string(program.width)},
                     {"L", std::to_string(length)},
                     {"bound_formula", "2(L+1)sqrt(s)/n"},
                     {"distance_floor", kDistanceFloorNote}};
  return report;
}

ExperimentReport hamming_expectation(const Program& program, int k, int delta,
                                     const InputString& fixed, const SamplingOptions& options) {
  const HammingFamily family = hamming_family(program.n, k, delta, fixed);
  if (family.size() == 0) throw std::invalid_argument("hamming family is empty");
  const Program alt = alternating_form(program);
  const auto length = query_levels(program);
  const Vector reference = final_state(alt, fixed);

  ExperimentReport report;
  report.experiment = "hamming";
  double total = 0.0;
  std::uint64_t used = 0;
  const bool sampled = family.size() > options.exhaustive_limit;
  if (sampled) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, family.size() - 1);
    for (std::size_t i = 0; i < options.sample_size; ++i) {
      total += (reference - final_state(alt, family.member(pick(rng)))).norm();
      ++used;
    }
  } else {
    for (std::uint64_t i = 0; i < family.size(); ++i) {
      total += (reference - final_state(alt, family.member(i))).norm();
      ++used;
    }
  }
  report.empirical = used ? total / static_cast<double>(used) : 0.0;

  const bool fix_yes = family.side() == HammingSide::fix_yes;
  const double denominator = fix_yes ? program.n - k : k;
  const double numerator = 2.0 * static_cast<double>(length + 1) * delta *
                           std::sqrt(static_cast<double>(program.width));
  report.bound = denominator > 0 ? numerator / denominator
                                 : (numerator > 0 ? std::numeric_limits<double>::infinity() : 0.0);
  finish(report);
  record_cauchy_schwarz(report, level_l1_norms(alt, fixed), program.width);
  report.metadata = {{"n", std::to_string(program.n)},
                     {"s", std::to_string(program.width)},
                     {"L", std::to_string(length)},
                     {"k", std::to_string(k)},
                     {"delta", std::to_string(delta)},
                     {"side", std::string(to_string(family.side()))},
                     {"family_size", std::to_string(family.size())},
                     {"mode", sampled ? "sampled" : "exhaustive"},
                     {"sample_size", std::to_string(used)},
                     {"bound_formula", fix_yes ? "2(L+1)delta*sqrt(s)/(n-k)" : "2(L+1)delta*sqrt(s)/k"},
                     {"distance_floor", kDistanceFloorNote}};
  return report;
}

DistinguishabilityReport distinguishability_check(const Program& program,
                                                  std::span<const InputString> yes_inputs,
                                                  std::span<const InputString> no_inputs) {
  struct Outcome {
    Vector state;
    double probability;
  };
  auto evaluate = [&](std::span<const InputString> inputs) {
    std::vector<Outcome> out;
    out.reserve(inputs.size());
    for (const InputString& x : inputs) {
      Vector state = final_state(program, x);
      const double p = accept_mass(state, program.accept);
      out.push_back({std::move(state), p});
    }
    return out;
  };
  const auto yes = evaluate(yes_inputs);
  const auto no = evaluate(no_inputs);

  DistinguishabilityReport report;
  report.min_gap_distance = std::numeric_limits<double>::infinity();
  for (const auto& o : yes) report.decision_failures += o.probability < kTwoThirds ? 1 : 0;
  for (const auto& o : no) report.decision_failures += o.probability > 1.0 - kTwoThirds ? 1 : 0;
  for (const auto& a : yes) {
    for (const auto& b : no) {
      ++report.pairs_checked;
      if (std::abs(a.probability - b.probability) < kProbabilityGap - 1e-12) continue;
      ++report.gap_pairs;
      const double d = (a.state - b.state).norm();
      report.min_gap_distance = std::min(report.min_gap_distance, d);
      if (d < kDistanceFloor) ++report.violations;
    }
  }
  if (report.gap_pairs == 0) report.min_gap_distance = 0.0;
  report.pass = report.violations == 0 && report.decision_failures == 0;
  return report;
}

DecisionFamily parity_family() {
  return {"parity", [](int n) {
            DecisionInstance inst{parity_program(n), {}, [](const InputString& x) {
                                    return x.weight() % 2 == 1;
                                  }};
            if (n <= 16) {
              inst.promise = all_inputs(static_cast<std::size_t>(n));
            } else {
              std::mt19937_64 rng(static_cast<std::uint64_t>(n));
              std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
              for (int i = 0; i < 4096; ++i) {
                for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
                inst.promise.emplace_back(bits);
              }
            }
            return inst;
          }};
}

DecisionFamily grover_or_family() {
  return {"grover-or", [](int n) {
            return DecisionInstance{circuit_to_rgqbp(grover_promise_or(n)), promise_or_inputs(n),
                                    [](const InputString& x) { return x.weight() == 1; }};
          }};
}

std::vector<TradeoffRow> tradeoff_scan(const DecisionFamily& family, std::span<const int> sizes) {
  std::vector<TradeoffRow> rows;
  for (int n : sizes) {
    const DecisionInstance inst = family.make(n);
    TradeoffRow row;
    row.n = n;
    row.s = inst.program.width;
    row.length = query_levels(inst.program);
    row.min_success = inst.promise.empty() ? 0.0 : 1.0;
    for (const InputString& x : inst.promise) {
      const double p = acceptance_probability(inst.program, x);
      row.min_success = std::min(row.min_success, inst.expected(x) ? p : 1.0 - p);
    }
    row.length_sqrt_width = static_cast<double>(row.length) * std::sqrt(static_cast<double>(row.s));
    row.ratio = row.length_sqrt_width / n;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gqbp
