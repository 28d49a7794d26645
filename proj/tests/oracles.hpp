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

#ifndef GQBP_TESTS_ORACLES_HPP
#define GQBP_TESTS_ORACLES_HPP

// Brute-force reference implementations used as test oracles. They share no
// code with the library beyond the data types: programs are evolved node by
// node from the edge amplitudes, circuits by building every gate as an
// explicit dense matrix, and families by filtering all 2^n strings.

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gqbp/circuit.hpp"
#include "gqbp/program.hpp"

namespace oracle {

using gqbp::Amplitude;
using gqbp::InputString;
using gqbp::Matrix;
using gqbp::Program;
using gqbp::Vector;

inline int bit_of(const std::string& x, int p) {
  return p < static_cast<int>(x.size()) ? x[static_cast<std::size_t>(p)] - '0' : 0;
}

/// psi'[q] = sum_j delta(v_j, x[label_j], v_q) psi[j], edge by edge.
inline std::vector<Amplitude> evolve(const Program& p, const std::string& x) {
  std::vector<Amplitude> psi(p.initial.data(), p.initial.data() + p.initial.size());
  const auto s = static_cast<std::size_t>(p.width);
  auto step = [&](auto edge, const std::vector<int>& labels) {
    std::vector<Amplitude> next(s, 0.0);
    for (std::size_t j = 0; j < s; ++j) {
      const int a = bit_of(x, labels[j]);
      for (std::size_t q = 0; q < s; ++q) next[q] += edge(j, a, q) * psi[j];
    }
    psi = next;
  };
  if (p.is_restricted()) {
    for (const auto& l : p.restricted_levels()) {
      step(
          [&](std::size_t j, int a, std::size_t q) {
            const Amplitude phase = a ? std::exp(Amplitude(0.0, l.thetas[j])) : Amplitude(1.0);
            return phase * l.base(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(j));
          },
          l.labels);
    }
  } else {
    for (const auto& l : p.general_levels()) {
      step(
          [&](std::size_t j, int a, std::size_t q) {
            const Matrix& m = a ? l.a1 : l.a0;
            return m(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(j));
          },
          l.labels);
    }
  }
  return psi;
}

inline double acceptance(const Program& p, const std::string& x) {
  const auto psi = evolve(p, x);
  double total = 0.0;
  for (int v : p.accept) total += std::norm(psi[static_cast<std::size_t>(v)]);
  return total;
}

inline double distance(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::norm(a[i] - b[i]);
  return std::sqrt(total);
}

/// Bit of basis index `j` on wire `w` (wire 0 most significant).
inline std::uint64_t wire_bit(std::uint64_t j, int w, int qubits) {
  return (j >> (qubits - 1 - w)) & 1U;
}

/// Dense matrix of an oracle gate built column by column.
inline Matrix oracle_matrix(const gqbp::Gate& g, int qubits, int n, const std::string& x) {
  const std::uint64_t dim = std::uint64_t{1} << qubits;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t j = 0; j < dim; ++j) {
    if (std::holds_alternative<gqbp::PhaseOracle>(g)) {
      int index_wires = 0;
      while ((1 << index_wires) < n) ++index_wires;
      std::uint64_t i = 0;
      for (int w = 0; w < index_wires; ++w) i = 2 * i + wire_bit(j, w, qubits);
      const double sign = bit_of(x, static_cast<int>(i)) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = sign;
    } else {
      const auto& b = std::get<gqbp::BitOracle>(g);
      std::uint64_t k = 0;
      for (int w : b.index_wires) k = 2 * k + wire_bit(j, w, qubits);
      std::uint64_t out = j;
      if (bit_of(x, static_cast<int>(k))) out ^= std::uint64_t{1} << (qubits - 1 - b.target_wire);
      m(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(j)) = 1.0;
    }
  }
  return m;
}

inline Vector circuit_state(const gqbp::QueryCircuit& c, const std::string& x) {
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(c.dimension()));
  psi[0] = 1.0;
  for (const auto& g : c.gates) {
    if (const auto* u = std::get_if<gqbp::UnitaryGate>(&g)) {
      psi = u->matrix * psi;
    } else {
      psi = oracle_matrix(g, c.qubits, c.n, x) * psi;
    }
  }
  return psi;
}

inline double circuit_acceptance(const gqbp::QueryCircuit& c, const std::string& x) {
  const Vector psi = circuit_state(c, x);
  double total = 0.0;
  for (auto j : c.accept) total += std::norm(psi[static_cast<Eigen::Index>(j)]);
  return total;
}

/// Pascal's triangle.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) {
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          t[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] +
          t[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
    }
  }
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline std::vector<std::string> all_strings(int n) {
  std::vector<std::string> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
      if ((v >> (n - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
    }
    out.push_back(s);
  }
  return out;
}

inline int weight(const std::string& s) {
  int w = 0;
  for (char c : s) w += c == '1';
  return w;
}

/// Members of the Hamming instance set for `fixed`, in increasing string order.
inline std::vector<std::string> hamming_members(const std::string& fixed, int k, int delta) {
  const int n = static_cast<int>(fixed.size());
  const bool fix_yes = weight(fixed) == k;
  std::vector<std::string> out;
  for (const auto& y : all_strings(n)) {
    bool ok = true;
    if (fix_yes) {
      ok = weight(y) == k + delta;
      for (int i = 0; ok && i < n; ++i) ok = fixed[static_cast<std::size_t>(i)] == '0' || y[static_cast<std::size_t>(i)] == '1';
    } else {
      ok = weight(y) == k;
      for (int i = 0; ok && i < n; ++i) ok = fixed[static_cast<std::size_t>(i)] == '1' || y[static_cast<std::size_t>(i)] == '0';
    }
    if (ok) out.push_back(y);
  }
  return out;
}

}  // namespace oracle

#endif  // GQBP_TESTS_ORACLES_HPP
