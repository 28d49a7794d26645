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

#include "gqbp/programs.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <bit>
#include <stdexcept>

#include <Eigen/QR>

namespace gqbp {

Program parity_program(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("parity_program needs an even n >= 2, got " + std::to_string(n));
  }
  const double r = 1.0 / std::sqrt(2.0);
  Program p;
  p.n = n;
  p.width = 2;
  p.initial = Vector::Constant(2, r);
  RestrictedLevels levels;
  for (int t = 0; t < n / 2; ++t) {
    RestrictedLevel level{{2 * t, 2 * t + 1}, Matrix::Identity(2, 2),
                          {std::numbers::pi, std::numbers::pi}};
    if (t == n / 2 - 1) level.base << r, r, r, -r;
    levels.push_back(std::move(level));
  }
  p.levels = std::move(levels);
  p.accept = {1};
  return p;
}

int grover_iterations(int n) {
  return static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(n))));
}

QueryCircuit grover_promise_or(int n) {
  if (n < 2 || !is_power_of_two(static_cast<std::uint64_t>(n))) {
    throw std::invalid_argument("grover_promise_or needs n a power of two >= 2, got " +
                                std::to_string(n));
  }
  const int m = ceil_log2(static_cast<std::uint64_t>(n));
  QueryCircuit c;
  c.qubits = m + 1;
  c.n = n;
  const Matrix ancilla = Matrix::Identity(2, 2);

  // H^{(x) m} has entries (-1)^{popcount(r & c)} / sqrt(n)
  Matrix hadamards(n, n);
  for (int r = 0; r < n; ++r) {
    for (int col = 0; col < n; ++col) {
      const double sign = (std::popcount(static_cast<unsigned>(r & col)) % 2) ? -1.0 : 1.0;
      hadamards(r, col) = sign / std::sqrt(static_cast<double>(n));
    }
  }
  const Matrix diffusion =
      Matrix::Constant(n, n, 2.0 / static_cast<double>(n)) - Matrix::Identity(n, n);

  c.gates.emplace_back(UnitaryGate{kron(hadamards, ancilla)});
  const Matrix round = kron(diffusion, ancilla);
  for (int t = 0; t < grover_iterations(n); ++t) {
    c.gates.emplace_back(PhaseOracle{});
    c.gates.emplace_back(UnitaryGate{round});
  }
  BitOracle mark;
  for (int w = 0; w < m; ++w) mark.index_wires.push_back(w);
  mark.target_wire = m;
  c.gates.emplace_back(std::move(mark));
  for (std::uint64_t j = 1; j < c.dimension(); j += 2) c.accept.push_back(j);
  return c;
}

std::vector<InputString> promise_or_inputs(int n) {
  std::vector<InputString> out{InputString::zeros(static_cast<std::size_t>(n))};
  for (int p = 0; p < n; ++p) {
    out.push_back(InputString::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(p)));
  }
  return out;
}

Matrix haar_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(r, c) = Amplitude(re, im);
    }
  }
  const Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix& packed = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Amplitude d = packed(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

Vector haar_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v[i] = Amplitude(re, im);
  }
  return v / v.norm();
}

Program random_rgqbp(int s, int length, int n, std::uint64_t seed) {
  if (s < 1 || length < 0 || n < 1) {
    throw std::invalid_argument("random_rgqbp needs s >= 1, length >= 0, n >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_int_distribution<int> label(0, n - 1);

  Program p;
  p.n = n;
  p.width = s;
  RestrictedLevels levels;
  for (int t = 0; t < length; ++t) {
    RestrictedLevel level;
    level.base = haar_unitary(s, rng);
    for (int j = 0; j < s; ++j) {
      level.thetas.push_back(angle(rng));
      level.labels.push_back(label(rng));
    }
    levels.push_back(std::move(level));
  }
  p.levels = std::move(levels);
  p.initial = haar_state(s, rng);
  for (int j = 0; j < (s + 1) / 2; ++j) p.accept.push_back(j);
  return p;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n-k+i) is divisible by i; split i across both factors first
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t lhs = result / g;
    const std::uint64_t rhs = (n - k + i) / (i / g);
    if (rhs != 0 && lhs > std::numeric_limits<std::uint64_t>::max() / rhs) {
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    result = lhs * rhs;
  }
  return result;
}

std::string_view to_string(HammingSide side) {
  return side == HammingSide::fix_yes ? "fix_yes" : "fix_no";
}

HammingFamily::HammingFamily(int n, int k, int delta, InputString fixed)
    : n_(n), k_(k), delta_(delta), side_(HammingSide::fix_yes), fixed_(std::move(fixed)) {
  if (n < 1 || k < 0 || delta < 0) {
    throw std::invalid_argument("hamming family needs n >= 1, k >= 0, delta >= 0");
  }
  if (static_cast<int>(fixed_.size()) != n) {
    throw std::invalid_argument("fixed string has length " + std::to_string(fixed_.size()) +
                                ", expected n = " + std::to_string(n));
  }
  const auto w = static_cast<int>(fixed_.weight());
  int wanted = 1;
  if (w == k) {
    side_ = HammingSide::fix_yes;
    wanted = 0;
  } else if (w == k + delta) {
    side_ = HammingSide::fix_no;
    wanted = 1;
  } else {
    throw std::invalid_argument("fixed string has weight " + std::to_string(w) +
                                ", expected k = " + std::to_string(k) +
                                " or k + delta = " + std::to_string(k + delta));
  }
  for (int i = 0; i < n; ++i) {
    if (fixed_[static_cast<std::size_t>(i)] == wanted) pool_.push_back(i);
  }
  if (delta > static_cast<int>(pool_.size())) {
    throw std::invalid_argument("delta = " + std::to_string(delta) + " exceeds the " +
                                std::to_string(pool_.size()) + " changeable positions");
  }
  size_ = binomial(pool_.size(), static_cast<std::uint64_t>(delta));
}

InputString HammingFamily::member(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("hamming family index out of range");
  std::vector<std::uint8_t> bits(fixed_.bits().begin(), fixed_.bits().end());
  const std::uint8_t flipped = side_ == HammingSide::fix_yes ? 1 : 0;
  // unrank the index-th delta-subset of pool_ in lexicographic order
  std::uint64_t rank = index;
  std::size_t start = 0;
  for (int remaining = delta_; remaining > 0; --remaining) {
    for (std::size_t i = start; i < pool_.size(); ++i) {
      const std::uint64_t with_i =
          binomial(pool_.size() - i - 1, static_cast<std::uint64_t>(remaining - 1));
      if (rank < with_i) {
        bits[static_cast<std::size_t>(pool_[i])] = flipped;
        start = i + 1;
        break;
      }
      rank -= with_i;
    }
  }
  return InputString(std::move(bits));
}

std::vector<InputString> HammingFamily::members(std::uint64_t limit) const {
  if (size_ > limit) throw std::length_error("hamming family too large to enumerate");
  std::vector<InputString> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(member(i));
  return out;
}

HammingFamily hamming_family(int n, int k, int delta, const InputString& fixed) {
  return HammingFamily(n, k, delta, fixed);
}

}  // namespace gqbp
