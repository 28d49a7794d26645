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

#include "gqbp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace gqbp {

using json = nlohmann::json;

ParseError::ParseError(const std::string& message, std::string field, std::size_t line,
                       std::size_t column)
    : std::invalid_argument(message), field_(std::move(field)), line_(line), column_(column) {}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what, path);
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::string key(const std::string& path, std::string_view name) {
  return path.empty() ? std::string(name) : path + "." + std::string(name);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream os;
    os << "syntax error at line " << line << ", column " << column;
    throw ParseError(os.str(), "", line, column);
  }
}

const json& member(const json& object, std::string_view name, const std::string& path) {
  const auto it = object.find(std::string(name));
  if (it == object.end()) schema_error(key(path, name), "missing field");
  return *it;
}

void expect_keys(const json& object, std::initializer_list<std::string_view> allowed,
                 const std::string& path) {
  if (!object.is_object()) schema_error(path.empty() ? "document" : path, "expected an object");
  for (const auto& [k, _] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      schema_error(key(path, k), "unknown field");
    }
  }
}

const json& array(const json& value, const std::string& path) {
  if (!value.is_array()) schema_error(path, "expected an array");
  return value;
}

long long integer(const json& value, const std::string& path, long long lo, long long hi) {
  if (!value.is_number_integer()) schema_error(path, "expected an integer");
  long long v = 0;
  if (value.is_number_unsigned()) {
    const auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(hi)) schema_error(path, "value out of range");
    v = static_cast<long long>(u);
  } else {
    v = value.get<long long>();
  }
  if (v < lo || v > hi) {
    schema_error(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
  }
  return v;
}

double real(const json& value, const std::string& path) {
  if (!value.is_number()) schema_error(path, "expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) schema_error(path, "expected a finite number");
  return v;
}

Amplitude complex(const json& value, const std::string& path) {
  if (!value.is_array() || value.size() != 2) schema_error(path, "expected [re, im]");
  return {real(value[0], at(path, 0)), real(value[1], at(path, 1))};
}

Vector vector(const json& value, const std::string& path) {
  array(value, path);
  Vector v(static_cast<Eigen::Index>(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = complex(value[i], at(path, i));
  }
  return v;
}

Matrix matrix(const json& value, const std::string& path, Eigen::Index dim) {
  array(value, path);
  if (static_cast<Eigen::Index>(value.size()) != dim) {
    schema_error(path, "expected " + std::to_string(dim) + " rows, found " +
                           std::to_string(value.size()));
  }
  Matrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const std::string row_path = at(path, static_cast<std::size_t>(r));
    const json& row = array(value[static_cast<std::size_t>(r)], row_path);
    if (static_cast<Eigen::Index>(row.size()) != dim) {
      schema_error(row_path, "expected " + std::to_string(dim) + " entries, found " +
                                 std::to_string(row.size()));
    }
    for (Eigen::Index c = 0; c < dim; ++c) {
      m(r, c) = complex(row[static_cast<std::size_t>(c)], at(row_path, static_cast<std::size_t>(c)));
    }
  }
  return m;
}

std::vector<int> labels(const json& value, const std::string& path, int n, int width) {
  array(value, path);
  if (value.empty() || static_cast<int>(value.size()) > width) {
    schema_error(path, "expected between 1 and " + std::to_string(width) + " labels");
  }
  std::vector<int> out;
  for (std::size_t j = 0; j < value.size(); ++j) {
    out.push_back(static_cast<int>(integer(value[j], at(path, j), 0, n - 1)));
  }
  return out;
}

template <typename T>
std::vector<T> index_set(const json& value, const std::string& path, long long limit) {
  array(value, path);
  std::vector<T> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(static_cast<T>(integer(value[i], at(path, i), 0, limit - 1)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json to_json(Amplitude a) { return json::array({a.real(), a.imag()}); }

json to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

std::string dump(const json& document) {
  try {
    return document.dump() + "\n";
  } catch (const json::type_error& e) {
    throw std::invalid_argument(std::string("cannot serialize: ") + e.what());
  }
}

void check_format(const json& document, std::string_view expected) {
  const json& format = member(document, "format", "");
  if (!format.is_string() || format.get<std::string>() != expected) {
    schema_error("format", "expected \"" + std::string(expected) + "\"");
  }
}

}  // namespace

Program parse_program(std::string_view text) {
  const json doc = parse_json(text);
  expect_keys(doc, {"accept", "alternating", "format", "initial", "kind", "levels", "n", "width"},
              "");
  check_format(doc, kProgramFormat);

  Program p;
  p.n = static_cast<int>(integer(member(doc, "n", ""), "n", 1, 1 << 30));
  p.width = static_cast<int>(integer(member(doc, "width", ""), "width", 1, 1 << 20));
  const json& kind = member(doc, "kind", "");
  if (!kind.is_string() || (kind != "restricted" && kind != "general")) {
    schema_error("kind", "expected \"restricted\" or \"general\"");
  }
  const bool restricted = kind == "restricted";

  p.initial = vector(member(doc, "initial", ""), "initial");
  if (p.initial.size() == 0 || p.initial.size() > p.width) {
    schema_error("initial", "expected between 1 and " + std::to_string(p.width) + " amplitudes");
  }
  if (p.initial.size() < p.width) {
    Vector padded = Vector::Zero(p.width);
    padded.head(p.initial.size()) = p.initial;
    p.initial = std::move(padded);
  }

  const json& levels = array(member(doc, "levels", ""), "levels");
  RestrictedLevels rls;
  GeneralLevels gls;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string path = at("levels", i);
    const json& level = levels[i];
    if (restricted) {
      expect_keys(level, {"base", "labels", "thetas"}, path);
    } else {
      expect_keys(level, {"a0", "a1", "labels"}, path);
    }
    RestrictedLevel r;
    GeneralLevel g;
    std::vector<int> ls = labels(member(level, "labels", path), key(path, "labels"), p.n, p.width);
    const auto w = static_cast<Eigen::Index>(ls.size());
    if (restricted) {
      r.labels = std::move(ls);
      r.base = matrix(member(level, "base", path), key(path, "base"), w);
      const std::string tpath = key(path, "thetas");
      const json& thetas = array(member(level, "thetas", path), tpath);
      if (static_cast<Eigen::Index>(thetas.size()) != w) {
        schema_error(tpath, "expected " + std::to_string(w) + " angles");
      }
      for (std::size_t j = 0; j < thetas.size(); ++j) r.thetas.push_back(real(thetas[j], at(tpath, j)));
      rls.push_back(w < p.width ? pad_level(r, p.width) : std::move(r));
    } else {
      g.labels = std::move(ls);
      g.a0 = matrix(member(level, "a0", path), key(path, "a0"), w);
      g.a1 = matrix(member(level, "a1", path), key(path, "a1"), w);
      gls.push_back(w < p.width ? pad_level(g, p.width) : std::move(g));
    }
  }
  if (restricted) {
    p.levels = std::move(rls);
  } else {
    p.levels = std::move(gls);
  }
  p.accept = index_set<int>(member(doc, "accept", ""), "accept", p.width);

  if (const auto it = doc.find("alternating"); it != doc.end()) {
    if (!it->is_boolean()) schema_error("alternating", "expected a boolean");
    p.alternating = it->get<bool>();
    if (p.alternating && (!restricted || p.length() % 2 != 0)) {
      schema_error("alternating", "needs a restricted program with an even number of levels");
    }
  }
  return p;
}

std::string serialize_program(const Program& program) {
  json doc;
  doc["format"] = kProgramFormat;
  doc["n"] = program.n;
  doc["width"] = program.width;
  doc["kind"] = std::string(to_string(program.kind()));
  doc["initial"] = to_json(program.initial);
  json levels = json::array();
  if (program.is_restricted()) {
    for (const RestrictedLevel& l : program.restricted_levels()) {
      levels.push_back({{"labels", l.labels}, {"base", to_json(l.base)}, {"thetas", l.thetas}});
    }
  } else {
    for (const GeneralLevel& l : program.general_levels()) {
      levels.push_back({{"labels", l.labels}, {"a0", to_json(l.a0)}, {"a1", to_json(l.a1)}});
    }
  }
  doc["levels"] = std::move(levels);
  doc["accept"] = program.accept;
  if (program.alternating) doc["alternating"] = true;
  return dump(doc);
}

QueryCircuit parse_circuit(std::string_view text) {
  const json doc = parse_json(text);
  expect_keys(doc, {"accept", "format", "gates", "n", "qubits"}, "");
  check_format(doc, kCircuitFormat);

  QueryCircuit c;
  c.qubits = static_cast<int>(integer(member(doc, "qubits", ""), "qubits", 0, 24));
  c.n = static_cast<int>(integer(member(doc, "n", ""), "n", 1, 1 << 30));
  const auto dim = static_cast<Eigen::Index>(c.dimension());

  const json& gates = array(member(doc, "gates", ""), "gates");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const std::string path = at("gates", i);
    const json& gate = gates[i];
    if (!gate.is_object()) schema_error(path, "expected an object");
    const json& type = member(gate, "type", path);
    if (type == "unitary") {
      expect_keys(gate, {"matrix", "type"}, path);
      c.gates.emplace_back(UnitaryGate{matrix(member(gate, "matrix", path), key(path, "matrix"), dim)});
    } else if (type == "phase_oracle") {
      expect_keys(gate, {"type"}, path);
      if (phase_oracle_wires(c.n) > c.qubits) {
        schema_error(path, "phase oracle needs " + std::to_string(phase_oracle_wires(c.n)) +
                               " index wires");
      }
      c.gates.emplace_back(PhaseOracle{});
    } else if (type == "bit_oracle") {
      expect_keys(gate, {"index_wires", "target_wire", "type"}, path);
      BitOracle b;
      const std::string wpath = key(path, "index_wires");
      const json& wires = array(member(gate, "index_wires", path), wpath);
      for (std::size_t w = 0; w < wires.size(); ++w) {
        b.index_wires.push_back(static_cast<int>(integer(wires[w], at(wpath, w), 0, c.qubits - 1)));
      }
      b.target_wire = static_cast<int>(
          integer(member(gate, "target_wire", path), key(path, "target_wire"), 0, c.qubits - 1));
      c.gates.emplace_back(std::move(b));
    } else {
      schema_error(key(path, "type"), "unknown gate type " + type.dump());
    }
  }
  c.accept = index_set<std::uint64_t>(member(doc, "accept", ""), "accept",
                                      static_cast<long long>(c.dimension()));
  try {
    check_circuit(c);
  } catch (const std::invalid_argument& e) {
    schema_error("gates", e.what());
  }
  return c;
}

std::string serialize_circuit(const QueryCircuit& circuit) {
  json doc;
  doc["format"] = kCircuitFormat;
  doc["qubits"] = circuit.qubits;
  doc["n"] = circuit.n;
  json gates = json::array();
  for (const Gate& g : circuit.gates) {
    if (const auto* u = std::get_if<UnitaryGate>(&g)) {
      gates.push_back({{"type", "unitary"}, {"matrix", to_json(u->matrix)}});
    } else if (std::holds_alternative<PhaseOracle>(g)) {
      gates.push_back({{"type", "phase_oracle"}});
    } else {
      const auto& b = std::get<BitOracle>(g);
      gates.push_back(
          {{"type", "bit_oracle"}, {"index_wires", b.index_wires}, {"target_wire", b.target_wire}});
    }
  }
  doc["gates"] = std::move(gates);
  doc["accept"] = circuit.accept;
  return dump(doc);
}

DocumentKind detect_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) schema_error("document", "expected an object");
  const json& format = member(doc, "format", "");
  if (format == kProgramFormat) return DocumentKind::program;
  if (format == kCircuitFormat) return DocumentKind::circuit;
  schema_error("format", "unknown document format " + format.dump());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "text") return TableFormat::text;
  if (name == "csv") return TableFormat::csv;
  throw std::invalid_argument("unknown table format '" + std::string(name) + "'");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

std::string render_table(const Table& table, TableFormat format) {
  std::ostringstream os;
  if (format == TableFormat::csv) {
    auto field = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
      }
      return out + "\"";
    };
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << field(cells[i]);
      os << '\n';
    };
    line(table.columns);
    for (const auto& row : table.rows) line(row);
    return os.str();
  }
  std::vector<std::size_t> widths(table.columns.size(), 0);
  auto grow = [&](const std::vector<std::string>& cells) {
    if (cells.size() > widths.size()) widths.resize(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) widths[i] = std::max(widths[i], cells[i].size());
  };
  grow(table.columns);
  for (const auto& row : table.rows) grow(row);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      out += cells[i];
      if (i + 1 < cells.size()) out.append(widths[i] - cells[i].size(), ' ');
    }
    os << out << '\n';
  };
  line(table.columns);
  std::size_t total = 0;
  for (std::size_t i = 0; i < widths.size(); ++i) total += widths[i] + (i ? 2 : 0);
  os << std::string(total, '-') << '\n';
  for (const auto& row : table.rows) line(row);
  return os.str();
}

Table experiment_table(const ExperimentReport& report) {
  Table t{{"field", "value"}, {}};
  t.rows.push_back({"experiment", report.experiment});
  t.rows.push_back({"empirical", format_number(report.empirical)});
  t.rows.push_back({"bound", format_number(report.bound)});
  t.rows.push_back({"slack", format_number(report.slack)});
  t.rows.push_back({"max_level_l1", format_number(report.max_level_l1)});
  t.rows.push_back({"cauchy_schwarz", report.cauchy_schwarz_ok ? "ok" : "violated"});
  for (const auto& [k, v] : report.metadata) t.rows.push_back({k, v});
  t.rows.push_back({"verdict", report.pass ? "pass" : "fail"});
  return t;
}

Table hybrid_table(const HybridTrace& trace) {
  Table t{{"level", "delta_nodes", "l1", "deviation"}, {}};
  for (std::size_t i = 0; i < trace.deviations.size(); ++i) {
    std::string nodes;
    for (std::size_t j = 0; j < trace.delta_nodes[i].size(); ++j) {
      nodes += (j ? " " : "") + std::to_string(trace.delta_nodes[i][j]);
    }
    t.rows.push_back({std::to_string(i), nodes.empty() ? "-" : nodes,
                      format_number(trace.level_l1[i]), format_number(trace.deviations[i])});
  }
  t.rows.push_back({"total", "", "", format_number(trace.bound_term)});
  t.rows.push_back({"distance", "", "", format_number(trace.final_distance)});
  t.rows.push_back({"verdict", "", "", trace.pass ? "pass" : "fail"});
  return t;
}

Table tradeoff_table(std::span<const TradeoffRow> rows) {
  Table t{{"n", "s", "L", "min_success", "L*sqrt(s)", "L*sqrt(s)/n"}, {}};
  for (const TradeoffRow& r : rows) {
    t.rows.push_back({std::to_string(r.n), std::to_string(r.s), std::to_string(r.length),
                      format_number(r.min_success), format_number(r.length_sqrt_width),
                      format_number(r.ratio)});
  }
  return t;
}

Table validation_table(const ProgramValidation& validation) {
  Table t{{"level", "assignments", "max_deviation", "verdict"}, {}};
  for (std::size_t i = 0; i < validation.levels.size(); ++i) {
    const ValidationReport& r = validation.levels[i];
    t.rows.push_back({std::to_string(i), std::to_string(r.assignments_checked),
                      format_number(r.max_deviation), r.pass ? "pass" : "fail"});
  }
  t.rows.push_back({"program", "", format_number(validation.max_deviation),
                    validation.pass ? "pass" : "fail"});
  return t;
}

}  // namespace gqbp
