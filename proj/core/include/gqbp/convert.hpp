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

#ifndef GQBP_CONVERT_HPP
#define GQBP_CONVERT_HPP

#include <cstddef>
#include <cstdint>

#include "gqbp/circuit.hpp"
#include "gqbp/program.hpp"

namespace gqbp {

/// Compiles a query circuit into a restricted program of width 2^q with one
/// level per oracle call.
///
/// Adjacent unitaries are fused, so the circuit is read as
/// U_0, O, U_1, O, ..., O, U_t. The initial vector is U_0|0^q>, and level i
/// applies the oracle phase on node j (= basis state j) followed by U_{i+1}.
///
/// A phase oracle gives every node theta = pi with label equal to the high
/// ceil(log2 n) bits of j. A bit oracle on target wire w is rewritten as
/// H_w D H_w, where D multiplies node j by (-1)^{x_k a_j} (k from the index
/// wires, a_j the target bit); the Hadamards fold into the neighbouring
/// unitaries. Nodes whose index k >= n read 0 and get theta = 0, label 0.
///
/// The accept set is the circuit's accept set.
Program circuit_to_rgqbp(const QueryCircuit& circuit);

/// Compiles a restricted program into a query circuit on registers
/// R1 (ceil(log2 w) wires), R2 (ceil(log2 n) wires) and R3 (one wire), in
/// that wire order. Per level p the gates are
///   LU_p, BitOracle(R2 -> R3), PU_p, BitOracle(R2 -> R3), LU_p, U_p
/// after an initial state-preparation unitary on R1, where LU_p XORs the
/// node label into R2 (an involution), PU_p applies exp(i a theta_{p,q}) on
/// |q>|k>|a>, and U_p = base_p (x) I. R2 and R3 return to |0>, so the
/// accept set is {q * 2^{|R2|+1} : q in F}.
///
/// Throws std::invalid_argument for general programs.
QueryCircuit rgqbp_to_circuit(const Program& program);

struct RoundtripReport {
  std::size_t inputs_checked = 0;
  bool exhaustive = false;
  double max_deviation = 0.0;
  bool pass = false;
};

/// Compares acceptance_probability(program, x) with the acceptance of
/// rgqbp_to_circuit(program) on every input when n <= max_exhaustive_n, and
/// on `samples` seeded random inputs otherwise.
RoundtripReport roundtrip_check(const Program& program, double tol = kDefaultTol,
                                std::size_t max_exhaustive_n = 16,
                                std::size_t samples = 4096, std::uint64_t seed = 1);

}  // namespace gqbp

#endif  // GQBP_CONVERT_HPP
