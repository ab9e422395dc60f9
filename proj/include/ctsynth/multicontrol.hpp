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
#include <optional>
#include <span>
#include <vector>

#include "ctsynth/circuit.hpp"

namespace ctsynth {

/// Lowering of multiply-controlled and two-level operators into primitive
/// Clifford+T gates.
///
/// Every routine appends into a caller-owned Circuit so that wires are named
/// in the caller's numbering. "Dirty" (borrowed) wires may hold any state and
/// are returned to it exactly.

/// Standard 7-T Toffoli.
void append_toffoli(Circuit& out, Qubit c1, Qubit c2, Qubit target);

/// C^k X on `target`. Uses up to k-2 dirty wires directly; with fewer, splits
/// the controls around dirty[0]. Needs at least one dirty wire once k >= 3.
/// Throws std::invalid_argument on qubit collisions or a missing wire.
void append_mcx(Circuit& out, std::span<const Qubit> controls, Qubit target, std::span<const Qubit> dirty);

/// C^k H on `target`: H = V X V^dag with V = S H T.
void append_mch(Circuit& out, std::span<const Qubit> controls, Qubit target, std::span<const Qubit> dirty);

/// Convenience wrapper returning a fresh circuit of the given width.
Circuit mcx(int width, std::span<const Qubit> controls, Qubit target, std::optional<Qubit> borrowed);

/// I - 2|0..0><0..0| on `reg`; needs `borrowed` once reg.size() >= 4.
void append_reflection_about_zero(Circuit& out, std::span<const Qubit> reg, std::optional<Qubit> borrowed);
/// Register 0..n-1 plus one borrowed wire at index n (width n+1).
Circuit reflection_about_zero(int n);

struct TwoLevelOp {
  enum class Kind : std::uint8_t { X, H, Tpow, PhaseOmega };

  Kind kind;
  std::size_t s;
  std::size_t t = 0;  // unused for PhaseOmega
  int power = 0;      // m for Tpow, l for PhaseOmega
  int width;

  static TwoLevelOp x(std::size_t s, std::size_t t, int width) { return {Kind::X, s, t, 0, width}; }
  static TwoLevelOp h(std::size_t s, std::size_t t, int width) { return {Kind::H, s, t, 0, width}; }
  static TwoLevelOp tpow(std::size_t s, std::size_t t, int m, int width) { return {Kind::Tpow, s, t, m, width}; }
  static TwoLevelOp phase_omega(std::size_t s, int l, int width) { return {Kind::PhaseOmega, s, 0, l, width}; }
};

/// The exact 2^width matrix the operator denotes.
RingMatrix two_level_matrix(const TwoLevelOp& op);

/// Route that maps basis states s < t onto a pair differing in one bit.
struct GrayRoute {
  int pivot;                 // the bit where the images differ; s has it clear
  std::vector<int> targets;  // CNOT(pivot -> r) for each r
  std::size_t pattern;       // image of s; its other bits are the control pattern
};

GrayRoute gray_route(std::size_t s, std::size_t t);

/// Appends op acting on `reg` (bit i of the basis index is reg[i]).
/// X and H kinds use `ancilla` as a dirty wire. Tpow and PhaseOmega compute
/// the selector into `ancilla`, which must be clean; from width 3 up they
/// also need `borrowed`.
void append_two_level(Circuit& out, const TwoLevelOp& op, std::span<const Qubit> reg, Qubit ancilla,
                      std::optional<Qubit> borrowed = std::nullopt);

/// Register 0..width-1, ancilla at `width`, optional borrowed wire at width+1.
Circuit lower_two_level(const TwoLevelOp& op, bool with_borrowed = false);

}  // namespace ctsynth
