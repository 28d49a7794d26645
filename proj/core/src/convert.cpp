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

#include "gqbp/convert.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gqbp/simulate.hpp"
#include "gqbp/transform.hpp"

namespace gqbp {

namespace {

struct QueryPhase {
  std::vector<int> labels;
  std::vector<double> thetas;
};

QueryPhase phase_oracle_phase(int qubits, int n) {
  const auto dim = std::uint64_t{1} << qubits;
  const int shift = qubits - phase_oracle_wires(n);
  QueryPhase phase{std::vector<int>(dim, 0), std::vector<double>(dim, 0.0)};
  for (std::uint64_t j = 0; j < dim; ++j) {
    const std::uint64_t k = j >> shift;
    if (k < static_cast<std::uint64_t>(n)) {
      phase.labels[j] = static_cast<int>(k);
      phase.thetas[j] = std::numbers::pi;
    }
  }
  return phase;
}

QueryPhase bit_oracle_phase(const BitOracle& oracle, int qubits, int n) {
  const auto dim = std::uint64_t{1} << qubits;
  const std::uint64_t target = std::uint64_t{1} << (qubits - 1 - oracle.target_wire);
  QueryPhase phase{std::vector<int>(dim, 0), std::vector<double>(dim, 0.0)};
  for (std::uint64_t j = 0; j < dim; ++j) {
    std::uint64_t k = 0;
    for (int w : oracle.index_wires) {
      k = (k << 1) | ((j >> (qubits - 1 - w)) & 1U);
    }
    if (k < static_cast<std::uint64_t>(n)) {
      phase.labels[j] = static_cast<int>(k);
      if (j & target) phase.thetas[j] = std::numbers::pi;
    }
  }
  return phase;
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd h;
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

}  // namespace

Program circuit_to_rgqbp(const QueryCircuit& circuit) {
  check_circuit(circuit);
  const auto dim = static_cast<Eigen::Index>(circuit.dimension());

  std::vector<Matrix> unitaries;
  std::vector<QueryPhase> phases;
  Matrix pending = Matrix::Identity(dim, dim);
  for (const Gate& g : circuit.gates) {
    if (const auto* u = std::get_if<UnitaryGate>(&g)) {
      pending = u->matrix * pending;
    } else if (std::holds_alternative<PhaseOracle>(g)) {
      unitaries.push_back(std::move(pending));
      phases.push_back(phase_oracle_phase(circuit.qubits, circuit.n));
      pending = Matrix::Identity(dim, dim);
    } else {
      const auto& b = std::get<BitOracle>(g);
      const Matrix h = embed_single_wire(hadamard(), b.target_wire, circuit.qubits);
      unitaries.push_back(h * pending);
      phases.push_back(bit_oracle_phase(b, circuit.qubits, circuit.n));
      pending = h;
    }
  }
  unitaries.push_back(std::move(pending));

  Program program;
  program.n = circuit.n;
  program.width = static_cast<int>(dim);
  program.initial = unitaries.front().col(0);
  RestrictedLevels levels;
  levels.reserve(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) {
    levels.push_back(RestrictedLevel{std::move(phases[i].labels), std::move(unitaries[i + 1]),
                                     std::move(phases[i].thetas)});
  }
  program.levels = std::move(levels);
  for (std::uint64_t j : circuit.accept) program.accept.push_back(static_cast<int>(j));
  return program;
}

QueryCircuit rgqbp_to_circuit(const Program& source) {
  if (!source.is_restricted()) {
    throw std::invalid_argument("rgqbp_to_circuit requires a restricted program");
  }
  check_program(source);

  const int node_wires = ceil_log2(static_cast<std::uint64_t>(source.width));
  const int index_wires = ceil_log2(static_cast<std::uint64_t>(source.n));
  const Program program = pad_width(source, 1 << node_wires);

  QueryCircuit circuit;
  circuit.qubits = node_wires + index_wires + 1;
  circuit.n = program.n;
  const auto dim = static_cast<Eigen::Index>(circuit.dimension());
  const auto ancilla_dim = Eigen::Index{1} << (index_wires + 1);
  const Matrix ancilla_identity = Matrix::Identity(ancilla_dim, ancilla_dim);

  BitOracle oracle;
  for (int w = 0; w < index_wires; ++w) oracle.index_wires.push_back(node_wires + w);
  oracle.target_wire = node_wires + index_wires;

  const Matrix prepare = complete_unitary(program.initial);
  circuit.gates.emplace_back(UnitaryGate{kron(prepare, ancilla_identity)});

  for (const RestrictedLevel& level : program.restricted_levels()) {
    Matrix label_xor = Matrix::Zero(dim, dim);
    Matrix phase = Matrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto node = static_cast<std::size_t>(j >> (index_wires + 1));
      const Eigen::Index k = (j >> 1) & ((Eigen::Index{1} << index_wires) - 1);
      const Eigen::Index a = j & 1;
      const Eigen::Index shifted = k ^ static_cast<Eigen::Index>(level.labels[node]);
      label_xor((static_cast<Eigen::Index>(node) << (index_wires + 1)) | (shifted << 1) | a, j) = 1.0;
      phase(j, j) = a ? std::polar(1.0, level.thetas[node]) : Amplitude{1.0};
    }
    circuit.gates.emplace_back(UnitaryGate{label_xor});
    circuit.gates.emplace_back(oracle);
    circuit.gates.emplace_back(UnitaryGate{std::move(phase)});
    circuit.gates.emplace_back(oracle);
    circuit.gates.emplace_back(UnitaryGate{std::move(label_xor)});
    circuit.gates.emplace_back(
        UnitaryGate{kron(level.base, ancilla_identity)});
  }

  for (int v : program.accept) {
    circuit.accept.push_back(static_cast<std::uint64_t>(v) << (index_wires + 1));
  }
  return circuit;
}

RoundtripReport roundtrip_check(const Program& program, double tol,
                                std::size_t max_exhaustive_n, std::size_t samples,
                                std::uint64_t seed) {
  const CircuitSimulator simulator(rgqbp_to_circuit(program));
  RoundtripReport report;
  auto compare = [&](const InputString& x) {
    const double dev =
        std::abs(acceptance_probability(program, x) - simulator.acceptance(x));
    report.max_deviation = std::max(report.max_deviation, dev);
    ++report.inputs_checked;
  };
  const auto n = static_cast<std::size_t>(program.n);
  if (n <= max_exhaustive_n) {
    report.exhaustive = true;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      compare(InputString::from_index(n, v));
    }
  } else {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> bits(n);
    for (std::size_t s = 0; s < samples; ++s) {
      for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
      compare(InputString(bits));
    }
  }
  report.pass = report.max_deviation <= tol;
  return report;
}

}  // namespace gqbp
