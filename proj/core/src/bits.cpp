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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <stdexcept>

#include "gqbp/types.hpp"

namespace gqbp {

int ceil_log2(std::uint64_t value) {
  int m = 0;
  while (m < 64 && (std::uint64_t{1} << m) < value) ++m;
  return m;
}

bool is_power_of_two(std::uint64_t value) {
  return value != 0 && (value & (value - 1)) == 0;
}

double unitarity_deviation(const Matrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  const Matrix gram = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return gram.rows() == 0 ? 0.0 : gram.cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix& m) {
  return m.size() == 0 || m.allFinite();
}

bool all_finite(const Vector& v) {
  return v.size() == 0 || v.allFinite();
}

InputString::InputString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("input bits must be 0 or 1");
  }
}

InputString InputString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("input string must contain only '0' and '1', got '" +
                                  std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return InputString(std::move(bits));
}

InputString InputString::zeros(std::size_t n) {
  return InputString(std::vector<std::uint8_t>(n, 0));
}

InputString InputString::unit(std::size_t n, std::size_t p) {
  if (p >= n) throw std::out_of_range("unit string position out of range");
  std::vector<std::uint8_t> bits(n, 0);
  bits[p] = 1;
  return InputString(std::move(bits));
}

InputString InputString::from_index(std::size_t n, std::uint64_t value) {
  std::vector<std::uint8_t> bits(n, 0);
  for (std::size_t i = 0; i < n && i < 64; ++i) {
    bits[n - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1U);
  }
  return InputString(std::move(bits));
}

std::size_t InputString::weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string InputString::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = bits_[i] ? '1' : '0';
  return out;
}

InputString InputString::with_bit(std::size_t i, int value) const {
  if (i >= bits_.size()) throw std::out_of_range("bit position out of range");
  std::vector<std::uint8_t> bits = bits_;
  bits[i] = value ? 1 : 0;
  return InputString(std::move(bits));
}

std::vector<InputString> all_inputs(std::size_t n) {
  if (n > 30) throw std::invalid_argument("refusing to enumerate 2^n inputs for n > 30");
  std::vector<InputString> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    out.push_back(InputString::from_index(n, v));
  }
  return out;
}

}  // namespace gqbp
