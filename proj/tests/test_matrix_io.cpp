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

#include <doctest.h>

#include "ctsynth/errors.hpp"
#include "ctsynth/matrix_io.hpp"
#include "support.hpp"

using namespace ctsynth;
using namespace testsupport;

TEST_CASE("ring matrix file") {
  const char* text = R"({"qubits": 1, "format": "ring", "entries": [
    {"a": 1, "b": 0, "c": 0, "d": 0, "kappa": 0}, {"a": 0, "b": 0, "c": 0, "d": 0, "kappa": 0},
    {"a": 0, "b": 0, "c": 0, "d": 0, "kappa": 0}, {"a": 1, "b": 0, "c": 1, "d": 0, "kappa": 1}]})";
  MatrixFile mf = parse_matrix_file(text);
  CHECK(mf.format == MatrixFile::Format::Ring);
  CHECK(mf.qubits == 1);
  CHECK(mf.ring == tgate());
  CHECK(std::abs(mf.floating(1, 1) - std::polar(1.0, M_PI / 4)) < 1e-15);
}

TEST_CASE("float matrix file with string decimals") {
  const char* text = R"({"qubits": 1, "format": "float", "entries": [
    {"re": "0", "im": 0}, {"re": 1, "im": 0}, {"re": 1.0, "im": 0}, {"re": 0, "im": "0.0"}]})";
  MatrixFile mf = parse_matrix_file(text);
  CHECK(mf.format == MatrixFile::Format::Float);
  CHECK(mf.floating(0, 1) == std::complex<double>(1, 0));
  CHECK(mf.floating(1, 0) == std::complex<double>(1, 0));
}

TEST_CASE("ring json round trip with big integers") {
  Rng rng(4);
  RingMatrix u = exact_simulate(random_clifford_t(2, 40, rng));
  u(0, 0) = RingScalar::from_quad({Integer("123456789012345678901234567890"), -3, 5, 7, 9});
  MatrixFile back = parse_matrix_file(ring_matrix_to_json(u));
  CHECK(back.ring == u);
  FloatMatrix f = to_float(exact_simulate(random_clifford_t(1, 10, rng)));
  CHECK(parse_matrix_file(float_matrix_to_json(f)).floating == f);
}

TEST_CASE("matrix file errors") {
  try {
    parse_matrix_file("{\n  \"qubits\": 1,\n  \"format\" \"ring\"\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_matrix_file(R"({"qubits": 1, "format": "ring", "entries": []})"), ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"qubits": 0, "format": "fancy", "entries": [{"re": 1, "im": 0}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"qubits": 0, "format": "ring", "entries": [{"re": 1, "im": 0}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"qubits": 0, "format": "ring", "entries": [{"a": "x1", "b": 0, "c": 0,
                  "d": 0, "kappa": 0}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"format": "ring"})"), ParseError);
}

TEST_CASE("report json carries the contract fields") {
  GateStats s;
  const std::string j = gate_stats_to_json(s);
  CHECK(j.find("\"total\": 0") != std::string::npos);
  CHECK(j.find("\"t_count\": 0") != std::string::npos);
  const std::string fs = four_square_to_json(7, FourSquare{2, 1, 1, 1});
  CHECK(fs.find("\"verified\": true") != std::string::npos);
}
