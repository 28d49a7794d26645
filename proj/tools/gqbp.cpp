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

// gqbp: validate, simulate, convert and analyse quantum branching programs.
//
// Exit status: 0 success, 1 failed verdict, 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gqbp/circuit.hpp"
#include "gqbp/convert.hpp"
#include "gqbp/experiments.hpp"
#include "gqbp/io.hpp"
#include "gqbp/program.hpp"
#include "gqbp/programs.hpp"
#include "gqbp/simulate.hpp"
#include "gqbp/transform.hpp"

namespace {

using namespace gqbp;

constexpr int kOk = 0;
constexpr int kVerdictFailed = 1;
constexpr int kUsage = 2;

std::string load(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  return read_file(path);
}

Program load_program(const std::string& path) {
  const std::string text = load(path);
  if (detect_document(text) != DocumentKind::program) {
    throw std::invalid_argument(path + " is a circuit, expected a program");
  }
  Program p = parse_program(text);
  check_program(p);
  return p;
}

QueryCircuit load_circuit(const std::string& path) {
  const std::string text = load(path);
  if (detect_document(text) != DocumentKind::circuit) {
    throw std::invalid_argument(path + " is a program, expected a circuit");
  }
  return parse_circuit(text);
}

Program as_restricted(const Program& p) { return p.is_restricted() ? p : restrict(p); }

std::string amplitudes(const Vector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_number(v[i].real());
    out += std::signbit(v[i].imag()) ? "" : "+";
    out += format_number(v[i].imag()) + "i";
  }
  return out;
}

struct Options {
  TableFormat format = TableFormat::text;
  std::string format_name = "text";
  std::string file;
  double tol = kDefaultTol;
  std::string input;
  bool trace = false;
  std::string target;
  std::string family;
  int n = 4;
  int s = 2;
  int len = 2;
  std::uint64_t seed = 1;
  bool as_program = false;
  std::string base;
  std::string alt;
  std::string experiment;
  int k = 1;
  int delta = 1;
  std::string fixed;
  std::vector<int> sizes{4, 16, 64};
};

void print(const Table& table, const Options& o) { std::cout << render_table(table, o.format); }

int cmd_validate(const Options& o) {
  const std::string text = load(o.file);
  if (detect_document(text) == DocumentKind::circuit) {
    const CircuitValidation v = validate_circuit(parse_circuit(text), o.tol);
    Table t{{"field", "value"}, {}};
    t.rows.push_back({"kind", "circuit"});
    t.rows.push_back({"unitary_gates", std::to_string(v.unitary_gates)});
    t.rows.push_back({"max_deviation", format_number(v.max_deviation)});
    if (!v.structural_error.empty()) t.rows.push_back({"error", v.structural_error});
    t.rows.push_back({"verdict", v.pass ? "pass" : "fail"});
    print(t, o);
    return v.pass ? kOk : kVerdictFailed;
  }
  const ProgramValidation v = validate_program(parse_program(text), o.tol);
  if (!v.structural_error.empty()) std::cerr << "error: " << v.structural_error << '\n';
  print(validation_table(v), o);
  return v.pass ? kOk : kVerdictFailed;
}

int cmd_simulate(const Options& o) {
  const std::string text = load(o.file);
  const InputString x = InputString::parse(o.input);
  Table t{{"field", "value"}, {}};
  if (detect_document(text) == DocumentKind::circuit) {
    const QueryCircuit c = parse_circuit(text);
    if (static_cast<int>(x.size()) != c.n) {
      throw std::invalid_argument("input has length " + std::to_string(x.size()) +
                                  ", circuit expects n = " + std::to_string(c.n));
    }
    const Vector state = run_circuit(c, x);
    if (o.trace) t.rows.push_back({"final_state", amplitudes(state)});
    const double p = circuit_acceptance(c, x);
    t.rows.push_back({"acceptance", format_number(p)});
    t.rows.push_back({"decision", std::string(to_string(decide(p)))});
    print(t, o);
    return kOk;
  }
  Program p = parse_program(text);
  check_program(p);
  const RunTrace trace = run(p, x);
  if (o.trace) {
    for (std::size_t i = 0; i < trace.states.size(); ++i) {
      t.rows.push_back({"state[" + std::to_string(i) + "]", amplitudes(trace.states[i])});
    }
  }
  const double prob = accept_mass(trace.final_state(), p.accept);
  t.rows.push_back({"acceptance", format_number(prob)});
  t.rows.push_back({"decision", std::string(to_string(decide(prob)))});
  print(t, o);
  return kOk;
}

int cmd_convert(const Options& o) {
  if (o.target == "circuit") {
    std::cout << serialize_circuit(rgqbp_to_circuit(as_restricted(load_program(o.file))));
  } else {
    std::cout << serialize_program(circuit_to_rgqbp(load_circuit(o.file)));
  }
  return kOk;
}

int cmd_split(const Options& o) {
  std::cout << serialize_program(split_layers(as_restricted(load_program(o.file))));
  return kOk;
}

int cmd_gen(const Options& o) {
  if (o.family == "parity") {
    std::cout << serialize_program(parity_program(o.n));
  } else if (o.family == "grover-or") {
    const QueryCircuit c = grover_promise_or(o.n);
    std::cout << (o.as_program ? serialize_program(circuit_to_rgqbp(c)) : serialize_circuit(c));
  } else {
    std::cout << serialize_program(random_rgqbp(o.s, o.len, o.n, o.seed));
  }
  return kOk;
}

int cmd_hybrid(const Options& o) {
  const Program p = as_restricted(load_program(o.file));
  const HybridTrace trace =
      hybrid_deviation(p, InputString::parse(o.base), InputString::parse(o.alt));
  print(hybrid_table(trace), o);
  return trace.pass && trace.cauchy_schwarz_ok ? kOk : kVerdictFailed;
}

int cmd_expect(const Options& o) {
  const Program p = as_restricted(load_program(o.file));
  ExperimentReport report;
  if (o.experiment == "or") {
    report = promise_or_expectation(p);
  } else {
    InputString fixed;
    if (o.fixed.empty()) {
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(p.n), 0);
      for (int i = 0; i < o.k && i < p.n; ++i) bits[static_cast<std::size_t>(i)] = 1;
      fixed = InputString(std::move(bits));
    } else {
      fixed = InputString::parse(o.fixed);
    }
    report = hamming_expectation(p, o.k, o.delta, fixed);
  }
  print(experiment_table(report), o);
  return report.pass && report.cauchy_schwarz_ok ? kOk : kVerdictFailed;
}

int cmd_scan(const Options& o) {
  const DecisionFamily family = o.family == "parity" ? parity_family() : grover_or_family();
  const std::vector<TradeoffRow> rows = tradeoff_scan(family, o.sizes);
  print(tradeoff_table(rows), o);
  for (const TradeoffRow& r : rows) {
    if (r.min_success < kTwoThirds) return kVerdictFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum branching program toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format_name, "Table rendering")
      ->check(CLI::IsMember({"text", "csv"}));

  auto* validate = app.add_subcommand("validate", "Check structure and unitarity");
  validate->add_option("file", o.file, "Program or circuit document ('-' for stdin)")->required();
  validate->add_option("--tol", o.tol, "Unitarity tolerance")->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "Run on one input");
  simulate->add_option("file", o.file, "Program or circuit document")->required();
  simulate->add_option("--input", o.input, "Input bitstring")->required();
  simulate->add_flag("--trace", o.trace, "Print every intermediate state");

  auto* convert = app.add_subcommand("convert", "Convert between circuits and programs");
  convert->add_option("--to", o.target, "Target representation")
      ->required()
      ->check(CLI::IsMember({"circuit", "bp"}));
  convert->add_option("file", o.file, "Source document")->required();

  auto* split = app.add_subcommand("split", "Rewrite into alternating form");
  split->add_option("file", o.file, "Program document")->required();

  auto* gen = app.add_subcommand("gen", "Emit a builtin program or circuit");
  gen->add_option("family", o.family, "parity, grover-or or random")
      ->required()
      ->check(CLI::IsMember({"parity", "grover-or", "random"}));
  gen->add_option("--n", o.n, "Input length")->required();
  gen->add_option("--s", o.s, "Width (random)");
  gen->add_option("--len", o.len, "Length (random)");
  gen->add_option("--seed", o.seed, "Seed (random)");
  gen->add_flag("--bp", o.as_program, "Emit grover-or as a converted program");

  auto* hybrid = app.add_subcommand("hybrid", "Per-level hybrid deviation for an input pair");
  hybrid->add_option("file", o.file, "Program document")->required();
  hybrid->add_option("--base", o.base, "Base input")->required();
  hybrid->add_option("--alt", o.alt, "Alternative input")->required();

  auto* expect = app.add_subcommand("expect", "Expectation bound experiment");
  expect->add_option("experiment", o.experiment, "or or hamming")
      ->required()
      ->check(CLI::IsMember({"or", "hamming"}));
  expect->add_option("file", o.file, "Program document")->required();
  expect->add_option("--k", o.k, "Hamming weight k");
  expect->add_option("--delta", o.delta, "Hamming gap delta");
  expect->add_option("--fixed", o.fixed, "Fixed string (default 1^k 0^(n-k))");

  auto* scan = app.add_subcommand("scan", "Length-width tradeoff table");
  scan->add_option("family", o.family, "parity or grover-or")
      ->required()
      ->check(CLI::IsMember({"parity", "grover-or"}));
  scan->add_option("--sizes", o.sizes, "Input lengths")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    o.format = parse_table_format(o.format_name);
    if (*validate) return cmd_validate(o);
    if (*simulate) return cmd_simulate(o);
    if (*convert) return cmd_convert(o);
    if (*split) return cmd_split(o);
    if (*gen) return cmd_gen(o);
    if (*hybrid) return cmd_hybrid(o);
    if (*expect) return cmd_expect(o);
    if (*scan) return cmd_scan(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
