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

#ifndef GQBP_TRANSFORM_HPP
#define GQBP_TRANSFORM_HPP

#include <cstddef>

#include "gqbp/program.hpp"

namespace gqbp {

/// Rewrites every restricted level (base, thetas, labels) as a query-dependent
/// level (I, thetas, labels) followed by a query-independent level
/// (base, 0, label 0). The result has 2L levels and alternating == true.
/// Throws std::invalid_argument for general programs.
Program split_layers(const Program& program);

/// Number of query-dependent levels: length()/2 for alternating programs,
/// length() otherwise.
std::size_t query_levels(const Program& program);

/// Appends dummy nodes until the width equals target. Dummy nodes keep an
/// identity self-transition, label 0, theta 0 and zero initial amplitude.
/// Throws std::invalid_argument when target < width.
Program pad_width(const Program& program, int target);

}  // namespace gqbp

#endif  // GQBP_TRANSFORM_HPP
