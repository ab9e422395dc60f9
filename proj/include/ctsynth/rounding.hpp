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
#include <utility>

#include "ctsynth/linalg.hpp"
#include "ctsynth/numtheory.hpp"

namespace ctsynth {

/// ceil(N/2 + 2 log2(1/eps)) + 5. Throws PrecisionRangeError unless 0 < eps <= 1.
int choose_precision(int n_qubits, double eps);

/// 2 * 2^(N-2m) + 2 sqrt2 * 2^(N/2-m), the bound on ||psi - phi||^2.
double rounding_error_bound(int n_qubits, int m);

struct RoundingPlan {
  int m = 1;
  std::size_t j = 0;  // receives (a + bi) / 2^m
  std::size_t l = 1;  // receives (c + di) / 2^m
  double epsilon_target = 0.0;
};

/// Picks the two lowest-index exact zeros of psi. Throws std::invalid_argument
/// when psi has fewer than two.
RoundingPlan plan_rounding(const FloatVector& psi, int m, double epsilon_target = 0.0);

/// Number of coordinates of psi that are exactly zero.
std::size_t zero_count(const FloatVector& psi);

struct RoundingResult {
  RingVector phi;
  Integer residual;  // D = 4^m - sum |beta_k|^2 before correction
  FourSquare correction;
};

/// Truncates every coordinate toward zero on the 2^-m grid, then fills the
/// plan's slots from a four-square decomposition of the residual so that the
/// result is exactly unit. Throws std::invalid_argument when psi is not unit
/// within 1e-8 or a slot is nonzero.
RoundingResult round_unit_vector_detailed(const FloatVector& psi, const RoundingPlan& plan, std::uint64_t seed = 0);
RingVector round_unit_vector(const FloatVector& psi, const RoundingPlan& plan, std::uint64_t seed = 0);

/// (|0>|psi>, |1>|psi>) with the new qubit on the top index bit;
/// R_{0psi} R_{1psi} = I (x) R_psi.
std::pair<FloatVector, FloatVector> split_reflection(const FloatVector& psi);

}  // namespace ctsynth
