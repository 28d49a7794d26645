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

#ifndef GQBP_IO_HPP
#define GQBP_IO_HPP

// JSON documents for programs ("gqbp-v1") and circuits ("qqc-v1").
// Complex numbers are [re, im] pairs, matrices are row-major arrays of rows,
// and object keys are written in sorted order with shortest round-trip
// decimals, so serialize(parse(serialize(p))) == serialize(p) byte for byte.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gqbp/circuit.hpp"
#include "gqbp/experiments.hpp"
#include "gqbp/program.hpp"

namespace gqbp {

inline constexpr std::string_view kProgramFormat = "gqbp-v1";
inline constexpr std::string_view kCircuitFormat = "qqc-v1";

/// Syntax errors carry a 1-based line and column; schema errors carry the
/// path of the offending field (for example "levels[1].labels[0]").
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string field, std::size_t line = 0,
             std::size_t column = 0);

  const std::string& field() const { return field_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string field_;
  std::size_t line_;
  std::size_t column_;
};

/// Levels narrower than `width` are padded with dummy nodes and a short
/// initial vector with zeros. Norm and unitarity are left to validate.
Program parse_program(std::string_view text);
std::string serialize_program(const Program& program);

QueryCircuit parse_circuit(std::string_view text);
std::string serialize_circuit(const QueryCircuit& circuit);

enum class DocumentKind { program, circuit };

/// Reads only the "format" key.
DocumentKind detect_document(std::string_view text);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

enum class TableFormat { text, csv };

/// "text" or "csv"; throws std::invalid_argument otherwise.
TableFormat parse_table_format(std::string_view name);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Text tables are space-aligned with a dashed rule under the header. CSV
/// quotes fields containing commas, quotes or newlines.
std::string render_table(const Table& table, TableFormat format);

/// Shortest round-trip decimal; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double value);

Table experiment_table(const ExperimentReport& report);
Table hybrid_table(const HybridTrace& trace);
Table tradeoff_table(std::span<const TradeoffRow> rows);
Table validation_table(const ProgramValidation& validation);

}  // namespace gqbp

#endif  // GQBP_IO_HPP
