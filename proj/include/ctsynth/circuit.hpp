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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ctsynth/linalg.hpp"

namespace ctsynth {

using Qubit = int;

enum class GateKind : std::uint8_t { H, T, Tdg, S, Sdg, X, Z, CNOT };
inline constexpr std::size_t kGateKindCount = 8;

std::string_view gate_name(GateKind kind);

/// One primitive Clifford+T instruction. Single-qubit gates leave control at -1.
struct Gate {
  GateKind kind;
  Qubit target;
  Qubit control = -1;

  static Gate single(GateKind kind, Qubit q) { return {kind, q, -1}; }
  static Gate cnot(Qubit control, Qubit target) { return {GateKind::CNOT, target, control}; }

  bool is_two_qubit() const { return kind == GateKind::CNOT; }
  Gate inverse() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Exact matrix of the gate kind; CNOT is 4x4 with the control on the low bit.
RingMatrix gate_matrix(GateKind kind);

enum class QubitRole : std::uint8_t { Data, Flag, AncillaClean, AncillaBorrowed };

std::string_view role_name(QubitRole role);
QubitRole role_from_name(std::string_view name);

/// Ordered stream of primitive gates over `width` wires. Basis index bit q
/// corresponds to wire q.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int width) : width_(width), roles_(static_cast<std::size_t>(width), QubitRole::Data) {}

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  const std::vector<QubitRole>& roles() const { return roles_; }
  QubitRole role(Qubit q) const { return roles_.at(static_cast<std::size_t>(q)); }
  void set_role(Qubit q, QubitRole role) { roles_.at(static_cast<std::size_t>(q)) = role; }
  /// Wires whose role is one of the ancilla kinds.
  int ancilla_count() const;

  /// Validates indices; throws std::out_of_range or std::invalid_argument.
  void append(const Gate& g);
  void add(GateKind kind, Qubit q) { append(Gate::single(kind, q)); }
  void cnot(Qubit control, Qubit target) { append(Gate::cnot(control, target)); }
  /// Appends every gate of `other`, whose width must not exceed ours.
  void append(const Circuit& other);
  /// Appends w^m as a phase on |1> of wire q, using Z, S, Sdg, T, Tdg.
  void phase(Qubit q, int m);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int width_ = 0;
  std::vector<Gate> gates_;
  std::vector<QubitRole> roles_;
};

/// a followed by b. Throws std::invalid_argument on width or role mismatch.
Circuit compose(const Circuit& a, const Circuit& b);
/// Reversed order, each gate inverted.
Circuit invert(const Circuit& c);

struct GateStats {
  std::size_t total = 0;
  std::size_t t_count = 0;
  int width = 0;
  std::array<std::size_t, kGateKindCount> histogram{};

  std::size_t count(GateKind k) const { return histogram[static_cast<std::size_t>(k)]; }
  GateStats& operator+=(const GateStats& o);
};

GateStats gate_stats(const Circuit& c);

inline constexpr int kDefaultWidthCap = 8;

/// Full 2^width unitary, exact. Throws WidthCapError above `width_cap`.
RingMatrix exact_simulate(const Circuit& c, int width_cap = kDefaultWidthCap);
/// Applies the circuit to one exact state vector of dimension 2^width.
RingVector apply_circuit(const Circuit& c, const RingVector& state);

}  // namespace ctsynth
