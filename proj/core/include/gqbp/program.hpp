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

#ifndef GQBP_PROGRAM_HPP
#define GQBP_PROGRAM_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "gqbp/types.hpp"

namespace gqbp {

/// One transition of a general branching program. Column j of a0 (a1) is
/// the transition vector taken from node j when its queried bit is 0 (1).
struct GeneralLevel {
  std::vector<int> labels;
  Matrix a0;
  Matrix a1;

  int width() const { return static_cast<int>(labels.size()); }
};

/// One transition in restricted form: node j moves along column j of base,
/// multiplied by exp(i * thetas[j]) when x[labels[j]] == 1.
struct RestrictedLevel {
  std::vector<int> labels;
  Matrix base;
  std::vector<double> thetas;

  int width() const { return static_cast<int>(labels.size()); }
};

using GeneralLevels = std::vector<GeneralLevel>;
using RestrictedLevels = std::vector<RestrictedLevel>;

enum class ProgramKind { general, restricted };

/// A levelled branching program of uniform width. Nodes, levels and
/// variable labels are 0-based.
struct Program {
  int n = 1;
  int width = 1;
  Vector initial;
  std::variant<GeneralLevels, RestrictedLevels> levels;
  /// Sorted, duplicate-free node indices of the final level.
  std::vector<int> accept;
  /// Set by split_layers: even levels query, odd levels do not.
  bool alternating = false;

  ProgramKind kind() const {
    return std::holds_alternative<RestrictedLevels>(levels) ? ProgramKind::restricted
                                                            : ProgramKind::general;
  }
  bool is_restricted() const { return kind() == ProgramKind::restricted; }
  std::size_t length() const;

  /// Throw std::invalid_argument when the program has the other kind.
  const RestrictedLevels& restricted_levels() const;
  const GeneralLevels& general_levels() const;
};

std::string_view to_string(ProgramKind kind);

/// Checks the structural invariants: positive n and width, finite entries,
/// every level of width `width`, labels in [0, n), accept in [0, width)
/// and duplicate-free, and a unit-norm initial vector within tol.
/// Throws std::invalid_argument describing the first violation.
void check_program(const Program& program, double tol = kDefaultTol);

/// Sorts and deduplicates an accept list.
std::vector<int> normalize_accept(std::vector<int> accept);

struct ValidationReport {
  bool pass = false;
  double max_deviation = 0.0;
  std::size_t assignments_checked = 0;
  /// For general levels: bits assigned to the sorted distinct labels of the
  /// first failing assignment. Empty when nothing failed.
  std::vector<int> failing_assignment;
  std::vector<int> distinct_labels;
  std::string interpretation;
};

/// Passes iff base is unitary within tol. The input-dependent matrix is
/// base * diag(exp(i theta_j x_{label_j})), so this covers every input.
/// Throws std::invalid_argument on mismatched labels/thetas/base sizes.
ValidationReport validate_restricted(const RestrictedLevel& level, double tol = kDefaultTol);

/// Checks unitarity of the assembled transition matrix for every one of the
/// 2^d assignments of bits to the d distinct labels of the level. Throws
/// std::invalid_argument when d > max_distinct.
ValidationReport validate_general(const GeneralLevel& level, double tol = kDefaultTol,
                                  int max_distinct = 20);

struct ProgramValidation {
  bool pass = false;
  /// Empty when the structural checks passed.
  std::string structural_error;
  std::vector<ValidationReport> levels;
  double max_deviation = 0.0;
};

/// Structural checks followed by per-level well-behavedness.
ProgramValidation validate_program(const Program& program, double tol = kDefaultTol,
                                   int max_distinct = 20);

/// Converts a general program to restricted form. For every node the phase
/// is read off the largest-magnitude entry of its a0 column. Throws
/// std::invalid_argument naming the level and node when the columns are
/// not phase-related within tol.
Program restrict(const Program& program, double tol = kDefaultTol);

/// a0 = base, a1 column j = exp(i theta_j) * base column j.
Program generalize(const Program& program);

/// Embeds a narrower square level into `width` nodes. Added nodes carry an
/// identity self-transition, label 0 and theta 0.
RestrictedLevel pad_level(const RestrictedLevel& level, int width);
GeneralLevel pad_level(const GeneralLevel& level, int width);

}  // namespace gqbp

#endif  // GQBP_PROGRAM_HPP
