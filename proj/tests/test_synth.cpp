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
#include "ctsynth/qasm.hpp"
#include "ctsynth/reflections.hpp"
#include "ctsynth/rounding.hpp"
#include "ctsynth/synth.hpp"
#include "support.hpp"

using namespace ctsynth;
using namespace testsupport;

namespace {

RingMatrix embedded_by_hand(const RingMatrix& u) {
  const std::size_t d = u.dim();
  RingMatrix out(2 * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      out(r, d + c) = u(r, c);
      out(d + r, c) = u(c, r).conj();
    }
  return out;
}

void check_exact(const RingMatrix& u) {
  SynthesisResult res = exact_synthesize(u);
  const int n = static_cast<int>(std::log2(static_cast<double>(u.dim())));
  CHECK(res.report.exact_equality);
  CHECK(res.report.verified);
  CHECK(res.report.ancilla_count <= 2);
  RingMatrix full = exact_simulate(res.circuit, 12);
  const std::size_t anc_states = std::size_t{1} << (res.circuit.width() - n - 1);
  for (std::size_t anc = 0; anc < anc_states; ++anc) {
    bool closed = false;
    CHECK(ancilla_block(full, n + 1, anc, &closed) == embedded_by_hand(u));
    CHECK(closed);
  }
}

}  // namespace

TEST_CASE("exact synthesis of T") { check_exact(tgate()); }

TEST_CASE("exact synthesis of the identity simulates X on the flag") {
  SynthesisResult res = exact_synthesize(RingMatrix::identity(2));
  CHECK(res.report.reflections.size() == 2);
  bool closed = false;
  CHECK(ancilla_block(exact_simulate(res.circuit), 2, 0, &closed) ==
        permutation(4, [](std::size_t i) { return i ^ 2; }));
  CHECK(closed);
}

TEST_CASE("exact synthesis of CNOT") {
  Circuit c(2);
  c.cnot(0, 1);
  check_exact(exact_simulate(c));
}

TEST_CASE("exact synthesis rejects non-unitary input") {
  CHECK_THROWS_AS(exact_synthesize(ring_matrix(2, {RingScalar(1), RingScalar(1), RingScalar(0), RingScalar(1)})),
                  NotUnitaryError);
}

TEST_CASE("exact round trip on random circuits") {
  Rng rng(55);
  for (int n = 1; n <= 2; ++n)
    for (int trial = 0; trial < 5; ++trial) check_exact(exact_simulate(random_clifford_t(n, 30, rng)));
}

TEST_CASE("flag contract on basis states") {
  Rng rng(8);
  RingMatrix u = exact_simulate(random_clifford_t(2, 30, rng));
  SynthesisResult res = exact_synthesize(u);
  const std::size_t full = std::size_t{1} << res.circuit.width();
  for (std::size_t b = 0; b < 4; ++b) {
    RingVector out = apply_circuit(res.circuit, basis_vector(full, 4 + b));
    for (std::size_t i = 0; i < full; ++i) CHECK(out[i] == (i < 4 ? u(i, b) : RingScalar(0)));
  }
}

TEST_CASE("approximate synthesis examples") {
  FloatMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  SynthesisResult a = approx_synthesize(h, 1.0, 0);
  CHECK(a.report.distance <= 1.0);
  CHECK(a.report.verified);

  FloatMatrix d = FloatMatrix::Identity(2, 2);
  d(1, 1) = std::polar(1.0, 0.7);
  SynthesisResult b = approx_synthesize(d, 0.01, 3);
  CHECK(b.report.distance <= 0.01);
  CHECK(b.report.distance == doctest::Approx(frobenius_distance(d, extract_flag_block(b.circuit, 1))));
  CHECK(b.report.m == choose_precision(2, 0.005));
}

TEST_CASE("approximate synthesis of ring-valued input") {
  // The w vectors carry a 1/sqrt2 factor and never lie on the 2^-m grid, so
  // only the certificate is checked here.
  RingMatrix u = ring_matrix(2, {gauss(1, 1, 2), gauss(1, -1, 2), gauss(1, -1, 2), gauss(1, 1, 2)});
  REQUIRE(is_unitary_exact(u));
  SynthesisResult r = approx_synthesize(to_float(u), 0.1, 1);
  CHECK(r.report.distance <= 0.1);
  CHECK(r.report.distance <= r.report.distance_bound_sum);
}

TEST_CASE("approximate synthesis accounting and budget") {
  Rng rng(12);
  for (int n = 1; n <= 2; ++n) {
    FloatMatrix u = haar_unitary(Eigen::Index{1} << n, rng);
    SynthesisResult r = approx_synthesize(u, 0.05, 4);
    CHECK(r.report.distance <= 0.05);
    CHECK(r.report.distance <= r.report.distance_bound_sum + 1e-12);
    CHECK(r.report.distance_bound_sum <= 0.05);
    CHECK(r.report.ancilla_count <= 2);
    CHECK(r.report.per_reflection_eps == doctest::Approx(0.05 / (1 << n)));
    CHECK(r.report.reflections.size() == (std::size_t{1} << n));
    CHECK(r.report.total.total == r.circuit.size());
    std::size_t sum = 0;
    for (const auto& x : r.report.reflections) sum += x.stats.total;
    CHECK(sum == r.circuit.size());
    CHECK(r.circuit.role(n) == QubitRole::Flag);
  }
}

TEST_CASE("one-qubit inputs split when zero slots run short") {
  Rng rng(2);
  SynthesisResult r = approx_synthesize(haar_unitary(2, rng), 0.1, 0);
  CHECK(r.report.width == 4);
  CHECK(r.report.ancilla_count == 2);
  for (const auto& x : r.report.reflections) CHECK(x.split);
  SynthesisResult t = approx_synthesize(FloatMatrix::Identity(2, 2), 0.1, 0);
  for (const auto& x : t.report.reflections) CHECK_FALSE(x.split);
}

TEST_CASE("approximate synthesis input validation") {
  FloatMatrix u = FloatMatrix::Identity(2, 2);
  CHECK_THROWS_AS(approx_synthesize(u, 2.0), PrecisionRangeError);
  CHECK_THROWS_AS(approx_synthesize(u, 0.0), PrecisionRangeError);
  u(0, 0) = 1.001;
  CHECK_THROWS_AS(approx_synthesize(u, 0.1), NotUnitaryError);
}

TEST_CASE("synthesis is deterministic") {
  Rng rng(19);
  FloatMatrix u = haar_unitary(4, rng);
  CHECK(export_qasm(approx_synthesize(u, 0.1, 7).circuit) == export_qasm(approx_synthesize(u, 0.1, 7).circuit));
  RingMatrix e = exact_simulate(random_clifford_t(2, 30, rng));
  CHECK(export_qasm(exact_synthesize(e).circuit) == export_qasm(exact_synthesize(e).circuit));
}
