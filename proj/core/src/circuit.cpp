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

#include "gqbp/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gqbp {

namespace {

constexpr int kMaxQubits = 24;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

std::string gate_prefix(std::size_t index) {
  return "gate " + std::to_string(index) + ": ";
}

std::uint64_t wire_mask(int wire, int qubits) {
  return std::uint64_t{1} << (qubits - 1 - wire);
}

}  // namespace

int phase_oracle_wires(int n) { return ceil_log2(static_cast<std::uint64_t>(n)); }

void check_circuit(const QueryCircuit& c) {
  if (c.qubits < 0 || c.qubits > kMaxQubits) {
    fail("qubit count " + std::to_string(c.qubits) + " outside [0, " +
         std::to_string(kMaxQubits) + "]");
  }
  if (c.n < 1) fail("oracle input length n must be >= 1");
  const auto dim = static_cast<Eigen::Index>(c.dimension());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (const auto* u = std::get_if<UnitaryGate>(&g)) {
      if (u->matrix.rows() != dim || u->matrix.cols() != dim) {
        std::ostringstream os;
        os << gate_prefix(i) << "unitary is " << u->matrix.rows() << "x" << u->matrix.cols()
           << ", expected " << dim << "x" << dim;
        fail(os.str());
      }
      if (!all_finite(u->matrix)) fail(gate_prefix(i) + "unitary has non-finite entries");
    } else if (std::holds_alternative<PhaseOracle>(g)) {
      if (phase_oracle_wires(c.n) > c.qubits) {
        fail(gate_prefix(i) + "phase oracle needs " + std::to_string(phase_oracle_wires(c.n)) +
             " index wires but the circuit has " + std::to_string(c.qubits));
      }
    } else {
      const auto& b = std::get<BitOracle>(g);
      std::vector<int> wires = b.index_wires;
      wires.push_back(b.target_wire);
      for (int w : wires) {
        if (w < 0 || w >= c.qubits) {
          fail(gate_prefix(i) + "wire " + std::to_string(w) + " outside [0, " +
               std::to_string(c.qubits) + ")");
        }
      }
      std::sort(wires.begin(), wires.end());
      if (std::adjacent_find(wires.begin(), wires.end()) != wires.end()) {
        fail(gate_prefix(i) + "bit oracle wires must be distinct");
      }
    }
  }
  for (std::size_t i = 0; i < c.accept.size(); ++i) {
    if (c.accept[i] >= c.dimension()) {
      fail("accept[" + std::to_string(i) + "] = " + std::to_string(c.accept[i]) +
           " is outside [0, " + std::to_string(c.dimension()) + ")");
    }
    if (i > 0 && c.accept[i - 1] >= c.accept[i]) {
      fail("accept must be sorted and duplicate-free");
    }
  }
}

CircuitValidation validate_circuit(const QueryCircuit& circuit, double tol) {
  CircuitValidation result;
  try {
    check_circuit(circuit);
  } catch (const std::invalid_argument& e) {
    result.structural_error = e.what();
    return result;
  }
  result.pass = true;
  for (const Gate& g : circuit.gates) {
    if (const auto* u = std::get_if<UnitaryGate>(&g)) {
      const double dev = unitarity_deviation(u->matrix);
      result.max_deviation = std::max(result.max_deviation, dev);
      result.pass = result.pass && dev <= tol;
      ++result.unitary_gates;
    }
  }
  return result;
}

CircuitSimulator::CircuitSimulator(const QueryCircuit& circuit)
    : qubits_(circuit.qubits), n_(circuit.n), accept_(circuit.accept) {
  check_circuit(circuit);
  const auto dim = static_cast<double>(circuit.dimension());
  for (const Gate& g : circuit.gates) {
    if (const auto* u = std::get_if<UnitaryGate>(&g)) {
      const auto nonzeros = (u->matrix.array() != Amplitude{}).count();
      if (static_cast<double>(nonzeros) * 4.0 < dim * dim) {
        ops_.emplace_back(SparseOp{u->matrix.sparseView()});
      } else {
        ops_.emplace_back(DenseOp{u->matrix});
      }
    } else if (std::holds_alternative<PhaseOracle>(g)) {
      ops_.emplace_back(PhaseOp{qubits_ - phase_oracle_wires(n_)});
    } else {
      const auto& b = std::get<BitOracle>(g);
      BitOp op{{}, wire_mask(b.target_wire, qubits_)};
      for (int w : b.index_wires) op.index_masks.push_back(wire_mask(w, qubits_));
      ops_.emplace_back(std::move(op));
    }
  }
}

Vector CircuitSimulator::run(const InputString& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw std::invalid_argument("input has length " + std::to_string(x.size()) +
                                ", circuit expects n = " + std::to_string(n_));
  }
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << qubits_);
  Vector state = Vector::Zero(dim);
  state[0] = 1.0;
  Vector scratch(dim);
  for (const Op& op : ops_) {
    if (const auto* d = std::get_if<DenseOp>(&op)) {
      scratch.noalias() = d->matrix * state;
      state.swap(scratch);
    } else if (const auto* s = std::get_if<SparseOp>(&op)) {
      scratch = s->matrix * state;
      state.swap(scratch);
    } else if (const auto* p = std::get_if<PhaseOp>(&op)) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        if (x.read(static_cast<std::uint64_t>(j) >> p->shift)) state[j] = -state[j];
      }
    } else {
      const auto& b = std::get<BitOp>(op);
      for (Eigen::Index j = 0; j < dim; ++j) {
        const auto basis = static_cast<std::uint64_t>(j);
        if (basis & b.target_mask) continue;
        std::uint64_t k = 0;
        for (std::uint64_t m : b.index_masks) k = (k << 1) | ((basis & m) ? 1U : 0U);
        if (x.read(k)) {
          std::swap(state[j], state[static_cast<Eigen::Index>(basis | b.target_mask)]);
        }
      }
    }
  }
  return state;
}

double CircuitSimulator::acceptance(const InputString& x) const {
  const Vector state = run(x);
  double p = 0.0;
  for (std::uint64_t j : accept_) p += std::norm(state[static_cast<Eigen::Index>(j)]);
  return p;
}

Vector run_circuit(const QueryCircuit& circuit, const InputString& x) {
  return CircuitSimulator(circuit).run(x);
}

double circuit_acceptance(const QueryCircuit& circuit, const InputString& x) {
  return CircuitSimulator(circuit).acceptance(x);
}

std::size_t count_queries(const QueryCircuit& circuit) {
  return static_cast<std::size_t>(
      std::count_if(circuit.gates.begin(), circuit.gates.end(),
                    [](const Gate& g) { return !std::holds_alternative<UnitaryGate>(g); }));
}

Matrix complete_unitary(const Vector& v, double tol) {
  if (v.size() == 0) throw std::invalid_argument("complete_unitary: empty vector");
  if (!all_finite(v) || std::abs(v.norm() - 1.0) > tol) {
    throw std::invalid_argument("complete_unitary: first column must have unit norm");
  }
  const Eigen::Index d = v.size();
  const double r0 = std::abs(v[0]);
  const Amplitude phase = r0 > 0.0 ? v[0] / r0 : Amplitude{1.0};
  // u = conj(phase) * v has a real non-negative leading entry; the
  // reflection H = I - 2 w w^H / |w|^2 with w = e0 - u maps e0 to u.
  Vector u = std::conj(phase) * v;
  u[0] = r0;
  Vector w = -u;
  w[0] += 1.0;
  const double wn2 = w.squaredNorm();
  Matrix h = Matrix::Identity(d, d);
  if (wn2 > 0.0) h -= (2.0 / wn2) * (w * w.adjoint());
  // H e0 = u only up to rounding in |u|; pin the column exactly.
  h.col(0) = u;
  return phase * h;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

Matrix embed_single_wire(const Eigen::Matrix2cd& op, int wire, int qubits) {
  if (wire < 0 || wire >= qubits) throw std::invalid_argument("wire out of range");
  const int high = wire;
  const int low = qubits - 1 - wire;
  const auto dim = Eigen::Index{1} << qubits;
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index a = 0; a < (Eigen::Index{1} << high); ++a) {
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        if (op(r, c) == Amplitude{}) continue;
        for (Eigen::Index b = 0; b < (Eigen::Index{1} << low); ++b) {
          const Eigen::Index row = (a << (low + 1)) | (Eigen::Index{r} << low) | b;
          const Eigen::Index col = (a << (low + 1)) | (Eigen::Index{c} << low) | b;
          out(row, col) = op(r, c);
        }
      }
    }
  }
  return out;
}

}  // namespace gqbp
