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
#include "ctsynth/multicontrol.hpp"

namespace ctsynth {

/// Column-lemma state preparation: builds C with C|0..0> = phi exactly by
/// repeatedly lowering the vector's denominator exponent.

/// w^phase applied to every basis state whose Gray pivot bit is set (a
/// diagonal of unit phases), followed by the two-level H on (s, t).
/// The diagonal leaves every entry's divisibility by sqrt2 unchanged, so only
/// its effect on entry t matters for the reduction.
struct PairMix {
  std::size_t s;
  std::size_t t;
  int phase;

  friend bool operator==(const PairMix&, const PairMix&) = default;
};

struct ReductionStep {
  std::vector<PairMix> mixes;
  unsigned long sde_before = 0;
  unsigned long sde_after = 0;
};

struct RoundResult {
  RingVector reduced;
  ReductionStep step;
};

/// Applies one mix to v exactly.
void apply_pair_mix(RingVector& v, const PairMix& mix);
/// Lowers one mix onto `reg` with `dirty` as the borrowed wire.
void append_pair_mix(Circuit& out, const PairMix& mix, std::span<const Qubit> reg, Qubit dirty);

/// Entries whose numerator at exponent sde(v) is not divisible by sqrt2.
std::vector<std::size_t> odd_entries(const RingVector& v);

/// One reduction pass. Requires an exactly unit v with sde(v) >= 1
/// (std::invalid_argument otherwise); the result has sde <= sde(v) - 1.
/// SynthesisError signals a broken invariant (odd parity, no pairing).
RoundResult reduce_round(const RingVector& v);

/// Appends a preparation of phi on `reg` (phi's index bit i is reg[i]),
/// borrowing `dirty`.
void append_prepare_state(Circuit& out, const RingVector& phi, std::span<const Qubit> reg, Qubit dirty);

/// Register 0..N-1 with a borrowed wire at N.
Circuit prepare_state(const RingVector& phi);

}  // namespace ctsynth
