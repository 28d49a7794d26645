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

#ifndef GQBP_PROGRAMS_HPP
#define GQBP_PROGRAMS_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "gqbp/circuit.hpp"
#include "gqbp/program.hpp"

namespace gqbp {

/// Width-2, length-n/2 restricted program deciding parity exactly.
///
/// Node 0 (top row) queries x_0, x_2, ..., node 1 (bottom row) queries
/// x_1, x_3, .... Every level flips the sign of a node whose bit is 1
/// (thetas = pi). Interior levels keep both nodes in place; the last level
/// sends top to (+,+) and bottom to (+,-) over the two terminals, each
/// entry 1/sqrt(2). The initial state is (1,1)/sqrt(2) and terminal 1
/// accepts. Requires n even and >= 2.
Program parity_program(int n);

/// Grover search with a final marking query, on log2(n) index wires plus one
/// ancilla (the last wire). Gates: H on the index register, then
/// floor(pi/4 sqrt(n)) rounds of PhaseOracle and the diffusion 2|u><u| - I,
/// then a BitOracle writing x_k into the ancilla. Accepts when the ancilla
/// is 1. Requires n a power of two, n >= 2.
QueryCircuit grover_promise_or(int n);

/// floor(pi/4 sqrt(n)).
int grover_iterations(int n);

/// {0^n, 1_0, ..., 1_{n-1}}: the Promise-OR instance set.
std::vector<InputString> promise_or_inputs(int n);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// phases of diag(R) moved into Q.
Matrix haar_unitary(int dim, std::mt19937_64& rng);

/// Uniformly random unit vector.
Vector haar_state(int dim, std::mt19937_64& rng);

/// Random restricted program: Haar bases, thetas uniform in [0, 2 pi),
/// labels uniform in [0, n), Haar initial state, accept = first ceil(s/2)
/// nodes. Deterministic for a fixed seed within this implementation.
Program random_rgqbp(int s, int length, int n, std::uint64_t seed);

/// C(n, k); 0 when k > n. Throws std::overflow_error past 2^64.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

enum class HammingSide {
  fix_yes,  ///< fixed string has weight k; members add delta ones.
  fix_no,   ///< fixed string has weight k + delta; members drop delta ones.
};

std::string_view to_string(HammingSide side);

/// The instance set paired with a fixed string in a (k, k + delta) Hamming
/// decision. Members are index-addressable in lexicographic order of the
/// changed positions.
class HammingFamily {
 public:
  HammingFamily(int n, int k, int delta, InputString fixed);

  int n() const { return n_; }
  int k() const { return k_; }
  int delta() const { return delta_; }
  HammingSide side() const { return side_; }
  const InputString& fixed() const { return fixed_; }

  /// C(n-k, delta) for fix_yes, C(k+delta, k) for fix_no.
  std::uint64_t size() const { return size_; }
  InputString member(std::uint64_t index) const;
  /// All members; throws std::length_error when size() exceeds `limit`.
  std::vector<InputString> members(std::uint64_t limit = 1'000'000) const;

 private:
  int n_;
  int k_;
  int delta_;
  HammingSide side_;
  InputString fixed_;
  std::vector<int> pool_;
  std::uint64_t size_;
};

/// Throws std::invalid_argument when weight(fixed) is neither k nor
/// k + delta, or delta exceeds the number of changeable positions.
HammingFamily hamming_family(int n, int k, int delta, const InputString& fixed);

}  // namespace gqbp

#endif  // GQBP_PROGRAMS_HPP
