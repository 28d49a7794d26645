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

#ifndef GQBP_TYPES_HPP
#define GQBP_TYPES_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace gqbp {

using Amplitude = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Default tolerance for unitarity and normalization checks.
inline constexpr double kDefaultTol = 1e-9;

/// Bounded-error acceptance threshold.
inline constexpr double kTwoThirds = 2.0 / 3.0;

/// Smallest m with 2^m >= value; ceil_log2(1) == 0.
int ceil_log2(std::uint64_t value);

bool is_power_of_two(std::uint64_t value);

/// Largest |(U^H U - I)_{ij}|.
double unitarity_deviation(const Matrix& u);

bool all_finite(const Matrix& m);
bool all_finite(const Vector& v);

/// An n-bit oracle input. Position 0 is the leftmost character of the
/// textual form, so "0100" has x[1] = 1.
class InputString {
 public:
  InputString() = default;
  explicit InputString(std::vector<std::uint8_t> bits);

  /// Parses a string over {0,1}; throws std::invalid_argument otherwise.
  static InputString parse(std::string_view text);
  static InputString zeros(std::size_t n);
  /// The string with a single 1 at position p.
  static InputString unit(std::size_t n, std::size_t p);
  /// Bit i equals bit (n-1-i) of value, so from_index(n, v).to_string() is
  /// v written in binary with n digits.
  static InputString from_index(std::size_t n, std::uint64_t value);

  std::size_t size() const { return bits_.size(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  /// Oracle read with the padding convention: indices >= n read 0.
  int read(std::uint64_t index) const {
    return index < bits_.size() ? bits_[index] : 0;
  }
  std::size_t weight() const;
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::string to_string() const;

  InputString with_bit(std::size_t i, int value) const;

  friend bool operator==(const InputString&, const InputString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// All 2^n inputs in from_index order. Throws if n > 30.
std::vector<InputString> all_inputs(std::size_t n);

}  // namespace gqbp

#endif  // GQBP_TYPES_HPP
