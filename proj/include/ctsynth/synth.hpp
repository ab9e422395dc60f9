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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ctsynth/circuit.hpp"

namespace ctsynth {

struct ReflectionReport {
  std::size_t column = 0;  // 0-based; reports print it 1-based
  bool split = false;      // routed through the extra-wire decomposition
  int m = 0;               // grid exponent used when rounding (approx only)
  unsigned long sde = 0;   // largest sde among the vectors actually synthesized
  GateStats stats;
  double distance_bound = 0.0;  // upper bound on this reflection's Frobenius error
};

struct SynthesisReport {
  enum class Mode { Exact, Approx };
  Mode mode = Mode::Exact;
  int qubits = 0;
  std::size_t dimension = 0;
  int m = 0;  // choose_precision(n + 1, eps / 2^n); 0 in exact mode
  double eps = 0.0;
  double per_reflection_eps = 0.0;
  std::uint64_t seed = 0;
  std::vector<ReflectionReport> reflections;
  GateStats total;
  int width = 0;
  std::vector<QubitRole> roles;
  int ancilla_count = 0;
  bool verified = false;
  bool exact_equality = false;
  double distance = 0.0;             // certified when verified
  double distance_bound_sum = 0.0;   // sum of per-reflection bounds
  double constant_c = 0.0;           // total / (4^n n (log2(1/eps) + n))
  std::string flag_convention;
};

struct SynthesisResult {
  Circuit circuit;
  SynthesisReport report;
};

/// Wire layout of every synthesized circuit: data 0..n-1, flag n, then
/// ancillas. The circuit maps |1>|x>|0..0> to |0>(U|x>)|0..0>.
inline constexpr int kMaxAncillas = 2;

/// Circuit whose unitary is U' (x) I_anc, with U' = |0><1| (x) U + |1><0| (x) U^dag.
/// Throws NotUnitaryError. With verify, re-simulates and requires exact equality.
SynthesisResult exact_synthesize(const RingMatrix& u, bool verify = true);

/// Approximates U' to Frobenius distance eps on the flag block. Throws
/// PrecisionRangeError for eps outside (0, 1] and NotUnitaryError past the
/// float tolerance. With verify, certifies the distance and requires it <= eps.
SynthesisResult approx_synthesize(const FloatMatrix& u, double eps, std::uint64_t seed = 0, bool verify = true);

/// <0|_flag <0|_anc C |1>_flag |0>_anc as an exact 2^n x 2^n matrix.
RingMatrix extract_flag_block(const Circuit& c, int n);

/// The full ancilla-inclusive target U' (x) I for an exact synthesis circuit.
RingMatrix exact_target(const RingMatrix& u, int width);

}  // namespace ctsynth
