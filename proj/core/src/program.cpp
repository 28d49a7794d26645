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

#include "gqbp/program.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <limits>
#include <stdexcept>

namespace gqbp {

namespace {

constexpr const char* kAllAssignments =
    "well-behaved = unitary for every assignment of bits to the distinct labels";

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

std::string level_prefix(std::size_t index) {
  return "level " + std::to_string(index) + ": ";
}

void check_labels(const std::vector<int>& labels, int n, std::size_t index) {
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j] < 0 || labels[j] >= n) {
      fail(level_prefix(index) + "label of node " + std::to_string(j) + " is " +
           std::to_string(labels[j]) + ", outside [0, " + std::to_string(n) + ")");
    }
  }
}

void check_square(const Matrix& m, int width, std::size_t index, const char* name) {
  if (m.rows() != width || m.cols() != width) {
    std::ostringstream os;
    os << level_prefix(index) << name << " is " << m.rows() << "x" << m.cols()
       << ", expected " << width << "x" << width;
    fail(os.str());
  }
  if (!all_finite(m)) fail(level_prefix(index) + name + " has non-finite entries");
}

void check_level(const RestrictedLevel& level, int width, int n, std::size_t index) {
  if (level.width() != width || static_cast<int>(level.thetas.size()) != width) {
    fail(level_prefix(index) + "labels/thetas must have " + std::to_string(width) +
         " entries");
  }
  check_square(level.base, width, index, "base");
  for (double t : level.thetas) {
    if (!std::isfinite(t)) fail(level_prefix(index) + "non-finite theta");
  }
  check_labels(level.labels, n, index);
}

void check_level(const GeneralLevel& level, int width, int n, std::size_t index) {
  if (level.width() != width) {
    fail(level_prefix(index) + "labels must have " + std::to_string(width) + " entries");
  }
  check_square(level.a0, width, index, "a0");
  check_square(level.a1, width, index, "a1");
  check_labels(level.labels, n, index);
}

}  // namespace

std::size_t Program::length() const {
  return std::visit([](const auto& ls) { return ls.size(); }, levels);
}

const RestrictedLevels& Program::restricted_levels() const {
  if (const auto* ls = std::get_if<RestrictedLevels>(&levels)) return *ls;
  throw std::invalid_argument("program is not in restricted form");
}

const GeneralLevels& Program::general_levels() const {
  if (const auto* ls = std::get_if<GeneralLevels>(&levels)) return *ls;
  throw std::invalid_argument("program is not in general form");
}

std::string_view to_string(ProgramKind kind) {
  return kind == ProgramKind::restricted ? "restricted" : "general";
}

std::vector<int> normalize_accept(std::vector<int> accept) {
  std::sort(accept.begin(), accept.end());
  accept.erase(std::unique(accept.begin(), accept.end()), accept.end());
  return accept;
}

void check_program(const Program& program, double tol) {
  if (program.n < 1) fail("input length n must be >= 1");
  if (program.width < 1) fail("width must be >= 1");
  if (program.initial.size() != program.width) {
    fail("initial vector has " + std::to_string(program.initial.size()) +
         " entries, expected " + std::to_string(program.width));
  }
  if (!all_finite(program.initial)) fail("initial vector has non-finite entries");
  const double norm = program.initial.norm();
  if (std::abs(norm - 1.0) > tol) {
    std::ostringstream os;
    os << "initial vector norm is " << norm << ", expected 1";
    fail(os.str());
  }
  std::visit(
      [&](const auto& ls) {
        for (std::size_t i = 0; i < ls.size(); ++i) {
          check_level(ls[i], program.width, program.n, i);
        }
      },
      program.levels);
  for (std::size_t i = 0; i < program.accept.size(); ++i) {
    const int v = program.accept[i];
    if (v < 0 || v >= program.width) {
      fail("accept[" + std::to_string(i) + "] = " + std::to_string(v) + " is outside [0, " +
           std::to_string(program.width) + ")");
    }
    if (i > 0 && program.accept[i - 1] >= v) fail("accept must be sorted and duplicate-free");
  }
  if (program.alternating && program.length() % 2 != 0) {
    fail("alternating program must have an even number of levels");
  }
}

ValidationReport validate_restricted(const RestrictedLevel& level, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const auto s = level.base.rows();
  if (level.base.cols() != s || static_cast<Eigen::Index>(level.labels.size()) != s ||
      static_cast<Eigen::Index>(level.thetas.size()) != s) {
    throw std::invalid_argument("restricted level: labels, thetas and base dimensions differ");
  }
  ValidationReport report;
  report.interpretation = "restricted: base unitary implies every input is unitary";
  report.assignments_checked = 1;
  const bool finite = all_finite(level.base) &&
                      std::all_of(level.thetas.begin(), level.thetas.end(),
                                  [](double t) { return std::isfinite(t); });
  report.max_deviation = finite ? unitarity_deviation(level.base)
                                : std::numeric_limits<double>::infinity();
  report.pass = report.max_deviation <= tol;
  return report;
}

ValidationReport validate_general(const GeneralLevel& level, double tol, int max_distinct) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const auto s = level.a0.rows();
  if (level.a0.cols() != s || level.a1.rows() != s || level.a1.cols() != s ||
      static_cast<Eigen::Index>(level.labels.size()) != s) {
    throw std::invalid_argument("general level: labels, a0 and a1 dimensions differ");
  }
  std::vector<int> distinct(level.labels.begin(), level.labels.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const int d = static_cast<int>(distinct.size());
  if (d > max_distinct) {
    throw std::invalid_argument("general level queries d = " + std::to_string(d) +
                                " distinct variables, more than the limit of " +
                                std::to_string(max_distinct) +
                                "; check per input via simulation instead");
  }

  // position of each node's label among the distinct labels
  std::vector<int> slot(level.labels.size());
  for (std::size_t j = 0; j < level.labels.size(); ++j) {
    slot[j] = static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), level.labels[j]) -
        distinct.begin());
  }

  ValidationReport report;
  report.interpretation = kAllAssignments;
  report.distinct_labels = distinct;
  report.pass = true;
  Matrix assembled(s, s);
  const std::uint64_t count = std::uint64_t{1} << d;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    // distinct[0] is the most significant bit of mask
    for (Eigen::Index j = 0; j < s; ++j) {
      const int bit = static_cast<int>((mask >> (d - 1 - slot[j])) & 1U);
      assembled.col(j) = bit ? level.a1.col(j) : level.a0.col(j);
    }
    const double dev = all_finite(assembled) ? unitarity_deviation(assembled)
                                             : std::numeric_limits<double>::infinity();
    report.max_deviation = std::max(report.max_deviation, dev);
    ++report.assignments_checked;
    if (dev > tol && report.pass) {
      report.pass = false;
      report.failing_assignment.resize(d);
      for (int k = 0; k < d; ++k) {
        report.failing_assignment[k] = static_cast<int>((mask >> (d - 1 - k)) & 1U);
      }
    }
  }
  return report;
}

ProgramValidation validate_program(const Program& program, double tol, int max_distinct) {
  ProgramValidation result;
  try {
    check_program(program, tol);
  } catch (const std::invalid_argument& e) {
    result.structural_error = e.what();
    return result;
  }
  result.pass = true;
  std::visit(
      [&](const auto& ls) {
        for (const auto& level : ls) {
          ValidationReport r;
          if constexpr (std::is_same_v<std::decay_t<decltype(level)>, RestrictedLevel>) {
            r = validate_restricted(level, tol);
          } else {
            r = validate_general(level, tol, max_distinct);
          }
          result.pass = result.pass && r.pass;
          result.max_deviation = std::max(result.max_deviation, r.max_deviation);
          result.levels.push_back(std::move(r));
        }
      },
      program.levels);
  return result;
}

Program restrict(const Program& program, double tol) {
  check_program(program, tol);
  if (program.is_restricted()) return program;

  RestrictedLevels out;
  const auto& levels = program.general_levels();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const GeneralLevel& g = levels[i];
    RestrictedLevel r{g.labels, g.a0, std::vector<double>(g.labels.size(), 0.0)};
    for (Eigen::Index j = 0; j < g.a0.cols(); ++j) {
      Eigen::Index pivot = 0;
      const double largest = g.a0.col(j).cwiseAbs().maxCoeff(&pivot);
      double theta = 0.0;
      if (largest > 0.0) {
        theta = std::arg(g.a1(pivot, j) / g.a0(pivot, j));
      }
      const Amplitude phase = std::polar(1.0, theta);
      const double mismatch = (g.a1.col(j) - phase * g.a0.col(j)).cwiseAbs().maxCoeff();
      if (mismatch > tol) {
        std::ostringstream os;
        os << "level " << i << " node " << j
           << ": 1-transition is not a phase multiple of the 0-transition (residual "
           << mismatch << ")";
        throw std::invalid_argument(os.str());
      }
      r.thetas[static_cast<std::size_t>(j)] = theta;
    }
    out.push_back(std::move(r));
  }
  Program result = program;
  result.levels = std::move(out);
  return result;
}

Program generalize(const Program& program) {
  check_program(program, std::numeric_limits<double>::infinity());
  if (!program.is_restricted()) return program;

  GeneralLevels out;
  for (const RestrictedLevel& r : program.restricted_levels()) {
    GeneralLevel g{r.labels, r.base, r.base};
    for (Eigen::Index j = 0; j < r.base.cols(); ++j) {
      g.a1.col(j) *= std::polar(1.0, r.thetas[static_cast<std::size_t>(j)]);
    }
    out.push_back(std::move(g));
  }
  Program result = program;
  result.levels = std::move(out);
  return result;
}

RestrictedLevel pad_level(const RestrictedLevel& level, int width) {
  const int s = level.width();
  if (width < s) throw std::invalid_argument("pad target narrower than level");
  RestrictedLevel out{level.labels, Matrix::Identity(width, width), level.thetas};
  out.base.topLeftCorner(s, s) = level.base;
  out.labels.resize(static_cast<std::size_t>(width), 0);
  out.thetas.resize(static_cast<std::size_t>(width), 0.0);
  return out;
}

GeneralLevel pad_level(const GeneralLevel& level, int width) {
  const int s = level.width();
  if (width < s) throw std::invalid_argument("pad target narrower than level");
  GeneralLevel out{level.labels, Matrix::Identity(width, width),
                   Matrix::Identity(width, width)};
  out.a0.topLeftCorner(s, s) = level.a0;
  out.a1.topLeftCorner(s, s) = level.a1;
  out.labels.resize(static_cast<std::size_t>(width), 0);
  return out;
}

}  // namespace gqbp
