// Copyright 2026 The ctsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ctsynth command-line front end.
//
// Exit codes: 0 success, 1 usage or I/O failure, 2 non-unitary input,
// 3 parse error, 4 eps out of range, 5 width cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ctsynth/errors.hpp"
#include "ctsynth/matrix_io.hpp"
#include "ctsynth/numtheory.hpp"
#include "ctsynth/qasm.hpp"
#include "ctsynth/synth.hpp"

namespace {

using namespace ctsynth;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

std::string qasm_header(const SynthesisReport& r) {
  std::ostringstream h;
  h << (r.mode == SynthesisReport::Mode::Exact ? "exact" : "approximate") << " synthesis, n=" << r.qubits;
  if (r.mode == SynthesisReport::Mode::Approx) h << ", eps=" << r.eps << ", seed=" << r.seed;
  h << "\n" << r.flag_convention;
  return h.str();
}

// The report goes to stdout; QASM goes to --out or, without it, stdout first.
void emit(const SynthesisResult& res, const std::string& out_path) {
  const std::string qasm = export_qasm(res.circuit, qasm_header(res.report));
  if (out_path.empty())
    std::cout << qasm;
  else
    write_file(out_path, qasm);
  std::cout << report_to_json(res.report) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Clifford+T synthesis through reflection decompositions"};
  app.require_subcommand(1);

  std::string matrix_path, qasm_path, out_path, number;
  double eps = 0.0;
  std::uint64_t seed = 0;
  bool no_verify = false;
  int width_cap = kDefaultWidthCap;

  auto* exact = app.add_subcommand("exact", "exact synthesis of a ring-format unitary");
  exact->add_option("matrix", matrix_path, "matrix JSON file")->required();
  exact->add_option("--out", out_path, "QASM output path");
  exact->add_flag("--no-verify", no_verify, "skip exact re-simulation");

  auto* approx = app.add_subcommand("approx", "approximate synthesis of a float-format unitary");
  approx->add_option("matrix", matrix_path, "matrix JSON file")->required();
  approx->add_option("--eps", eps, "Frobenius distance target in (0, 1]")->required();
  approx->add_option("--seed", seed, "seed for the four-square search");
  approx->add_option("--out", out_path, "QASM output path");
  approx->add_flag("--no-verify", no_verify, "skip distance certification");

  auto* simulate = app.add_subcommand("simulate", "exact unitary of a QASM circuit");
  simulate->add_option("qasm", qasm_path, "QASM file")->required();
  simulate->add_option("--width-cap", width_cap, "largest width to simulate");

  auto* stats = app.add_subcommand("stats", "gate statistics of a QASM circuit");
  stats->add_option("qasm", qasm_path, "QASM file")->required();

  auto* foursq = app.add_subcommand("foursquare", "write N as a sum of four squares");
  foursq->add_option("N", number, "non-negative integer")->required();
  foursq->add_option("--seed", seed, "seed for the randomized search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (exact->parsed()) {
    MatrixFile mf = parse_matrix_file(read_file(matrix_path));
    if (mf.format != MatrixFile::Format::Ring) throw ParseError("exact synthesis needs a ring-format matrix", 0, 0);
    emit(exact_synthesize(mf.ring, !no_verify), out_path);
  } else if (approx->parsed()) {
    if (!(eps > 0.0 && eps <= 1.0)) throw PrecisionRangeError("eps must lie in (0, 1]");
    MatrixFile mf = parse_matrix_file(read_file(matrix_path));
    emit(approx_synthesize(mf.floating, eps, seed, !no_verify), out_path);
  } else if (simulate->parsed()) {
    Circuit c = parse_qasm(read_file(qasm_path));
    std::cout << ring_matrix_to_json(exact_simulate(c, width_cap)) << "\n";
  } else if (stats->parsed()) {
    Circuit c = parse_qasm(read_file(qasm_path));
    std::cout << gate_stats_to_json(gate_stats(c)) << "\n";
  } else if (foursq->parsed()) {
    Integer n;
    if (number.empty() || n.set_str(number, 10) != 0 || n < 0)
      throw ParseError("N must be a non-negative decimal integer", 0, 0);
    std::cout << four_square_to_json(n, four_square(n, seed)) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ctsynth::NotUnitaryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ctsynth::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const ctsynth::PrecisionRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ctsynth::WidthCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
