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
#include <span>
#include <vector>

#include "ctsynth/circuit.hpp"

namespace ctsynth {

/// R = I - 2|v><v| for the stored unit vector. `column` is the 0-based
/// column of U the vector was built from.
struct RingReflection {
  RingVector vector;
  std::size_t column = 0;
};

struct FloatReflection {
  FloatVector vector;
  std::size_t column = 0;
};

/// U' = |0><1| (x) U + |1><0| (x) U^dag as the product of 2^n commuting
/// reflections over n+1 qubits. The flag is the top index bit, so basis
/// index = flag * 2^n + data.
struct HouseholderDecomposition {
  int width = 0;
  std::vector<RingReflection> reflections;
};

struct FloatHouseholderDecomposition {
  int width = 0;
  std::vector<FloatReflection> reflections;
};

RingMatrix embedded_unitary(const RingMatrix& u);
FloatMatrix embedded_unitary(const FloatMatrix& u);

/// w_j = (|1>|j> - |0>|u_j>) / sqrt2 for every column j, ascending.
/// Throws NotUnitaryError unless u is unitary (exactly, or within
/// kFloatUnitaryTolerance for float input).
HouseholderDecomposition householder_decompose(const RingMatrix& u);
FloatHouseholderDecomposition householder_decompose(const FloatMatrix& u);

/// Product of the reflections in ascending column order.
RingMatrix reflection_product(const HouseholderDecomposition& d);
FloatMatrix reflection_product(const FloatHouseholderDecomposition& d);

/// Appends R_phi = P R_0 P^dag on `reg`, with P the state preparation of phi.
/// `dirty` is borrowed and restored.
void append_reflection(Circuit& out, const RingVector& phi, std::span<const Qubit> reg, Qubit dirty);

/// Register 0..N-1 with a borrowed wire at N.
Circuit synthesize_reflection(const RingVector& phi);

}  // namespace ctsynth
