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

#ifndef GQBP_CIRCUIT_HPP
#define GQBP_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/SparseCore>

#include "gqbp/types.hpp"

namespace gqbp {

// Wire 0 is the most significant bit of a basis index: on q wires, wire w
// of basis state j is bit (q - 1 - w) of j.

/// A full 2^q x 2^q unitary.
struct UnitaryGate {
  Matrix matrix;
};

/// |i>|rest> -> (-1)^{x_i} |i>|rest>, where i is read from the first
/// ceil(log2 n) wires.
struct PhaseOracle {};

/// |k>|a> -> |k>|a xor x_k>, k read from index_wires (first listed wire is
/// the most significant bit).
struct BitOracle {
  std::vector<int> index_wires;
  int target_wire = 0;
};

using Gate = std::variant<UnitaryGate, PhaseOracle, BitOracle>;

struct QueryCircuit {
  int qubits = 0;
  int n = 1;
  std::vector<Gate> gates;
  /// Sorted, duplicate-free accepting basis states.
  std::vector<std::uint64_t> accept;

  std::uint64_t dimension() const { return std::uint64_t{1} << qubits; }
};

/// Number of wires a phase oracle reads its index from.
int phase_oracle_wires(int n);

/// Structural checks: dimensions, wire ranges, finite entries, accept set.
/// Throws std::invalid_argument describing the first violation.
void check_circuit(const QueryCircuit& circuit);

struct CircuitValidation {
  bool pass = false;
  std::string structural_error;
  double max_deviation = 0.0;
  std::size_t unitary_gates = 0;
};

/// Structural checks plus unitarity of every Unitary gate within tol.
CircuitValidation validate_circuit(const QueryCircuit& circuit, double tol = kDefaultTol);

/// A circuit prepared for repeated simulation. Sparse unitaries (such as
/// permutations, diagonals and kron(U, I)) are stored compressed.
class CircuitSimulator {
 public:
  explicit CircuitSimulator(const QueryCircuit& circuit);

  /// Applies the gates left to right to |0^q>. Oracle reads at k >= n see 0.
  Vector run(const InputString& x) const;
  double acceptance(const InputString& x) const;

  int qubits() const { return qubits_; }

 private:
  using Sparse = Eigen::SparseMatrix<Amplitude, Eigen::RowMajor>;
  struct DenseOp { Matrix matrix; };
  struct SparseOp { Sparse matrix; };
  struct PhaseOp { int shift; };
  struct BitOp { std::vector<std::uint64_t> index_masks; std::uint64_t target_mask; };
  using Op = std::variant<DenseOp, SparseOp, PhaseOp, BitOp>;

  int qubits_;
  int n_;
  std::vector<Op> ops_;
  std::vector<std::uint64_t> accept_;
};

/// Throws std::invalid_argument on |x| != n or an invalid circuit.
Vector run_circuit(const QueryCircuit& circuit, const InputString& x);

/// Sum of |state[j]|^2 over the accept set.
double circuit_acceptance(const QueryCircuit& circuit, const InputString& x);

/// Number of oracle gates of either kind.
std::size_t count_queries(const QueryCircuit& circuit);

/// A unitary whose column 0 is first_column, built from a single Householder
/// reflection scaled by the phase of first_column[0]. Throws
/// std::invalid_argument if first_column is not unit-norm within tol.
Matrix complete_unitary(const Vector& first_column, double tol = kDefaultTol);

/// Kronecker product; a acts on the leading (more significant) wires.
Matrix kron(const Matrix& a, const Matrix& b);

/// Matrix of a single-wire operator acting on `wire` of a q-wire register.
Matrix embed_single_wire(const Eigen::Matrix2cd& op, int wire, int qubits);

}  // namespace gqbp

#endif  // GQBP_CIRCUIT_HPP
