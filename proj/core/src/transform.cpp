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

#include "gqbp/transform.hpp"

#include <stdexcept>

namespace gqbp {

Program split_layers(const Program& program) {
  if (!program.is_restricted()) {
    throw std::invalid_argument("split_layers requires a restricted program");
  }
  const auto s = static_cast<std::size_t>(program.width);
  RestrictedLevels out;
  out.reserve(2 * program.length());
  for (const RestrictedLevel& level : program.restricted_levels()) {
    out.push_back(RestrictedLevel{level.labels, Matrix::Identity(program.width, program.width),
                                  level.thetas});
    out.push_back(RestrictedLevel{std::vector<int>(s, 0), level.base,
                                  std::vector<double>(s, 0.0)});
  }
  Program result = program;
  result.levels = std::move(out);
  result.alternating = true;
  return result;
}

std::size_t query_levels(const Program& program) {
  return program.alternating ? program.length() / 2 : program.length();
}

Program pad_width(const Program& program, int target) {
  if (target < program.width) {
    throw std::invalid_argument("pad_width target " + std::to_string(target) +
                                " is below the current width " +
                                std::to_string(program.width));
  }
  Program result = program;
  result.width = target;
  result.initial = Vector::Zero(target);
  result.initial.head(program.width) = program.initial;
  std::visit(
      [&](auto& levels) {
        for (auto& level : levels) level = pad_level(level, target);
      },
      result.levels);
  return result;
}

}  // namespace gqbp
