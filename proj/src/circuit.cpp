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

#include "ctsynth/circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include "ctsynth/errors.hpp"

namespace ctsynth {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::CNOT: return "cx";
  }
  return "?";
}

Gate Gate::inverse() const {
  switch (kind) {
    case GateKind::T: return {GateKind::Tdg, target, control};
    case GateKind::Tdg: return {GateKind::T, target, control};
    case GateKind::S: return {GateKind::Sdg, target, control};
    case GateKind::Sdg: return {GateKind::S, target, control};
    default: return *this;
  }
}

RingMatrix gate_matrix(GateKind kind) {
  if (kind == GateKind::CNOT) {
    RingMatrix m(4);
    m(0, 0) = RingScalar::one();
    m(2, 2) = RingScalar::one();
    m(3, 1) = RingScalar::one();
    m(1, 3) = RingScalar::one();
    return m;
  }
  RingMatrix m(2);
  switch (kind) {
    case GateKind::H:
      m(0, 0) = m(0, 1) = m(1, 0) = RingScalar::inv_sqrt2();
      m(1, 1) = -RingScalar::inv_sqrt2();
      return m;
    case GateKind::X:
      m(0, 1) = m(1, 0) = RingScalar::one();
      return m;
    default: break;
  }
  int power = 0;
  switch (kind) {
    case GateKind::T: power = 1; break;
    case GateKind::Tdg: power = 7; break;
    case GateKind::S: power = 2; break;
    case GateKind::Sdg: power = 6; break;
    case GateKind::Z: power = 4; break;
    default: break;
  }
  m(0, 0) = RingScalar::one();
  m(1, 1) = RingScalar::omega(power);
  return m;
}

std::string_view role_name(QubitRole role) {
  switch (role) {
    case QubitRole::Data: return "data";
    case QubitRole::Flag: return "flag";
    case QubitRole::AncillaClean: return "ancilla-clean";
    case QubitRole::AncillaBorrowed: return "ancilla-borrowed";
  }
  return "?";
}

QubitRole role_from_name(std::string_view name) {
  for (auto r : {QubitRole::Data, QubitRole::Flag, QubitRole::AncillaClean, QubitRole::AncillaBorrowed})
    if (role_name(r) == name) return r;
  throw std::invalid_argument("unknown qubit role '" + std::string(name) + "'");
}

int Circuit::ancilla_count() const {
  return static_cast<int>(std::count_if(roles_.begin(), roles_.end(), [](QubitRole r) {
    return r == QubitRole::AncillaClean || r == QubitRole::AncillaBorrowed;
  }));
}

void Circuit::append(const Gate& g) {
  if (g.target < 0 || g.target >= width_) throw std::out_of_range("gate target out of range");
  if (g.is_two_qubit()) {
    if (g.control < 0 || g.control >= width_) throw std::out_of_range("gate control out of range");
    if (g.control == g.target) throw std::invalid_argument("CNOT control equals target");
  } else if (g.control != -1) {
    throw std::invalid_argument("single-qubit gate with a control");
  }
  gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.width_ > width_) throw std::invalid_argument("appending a wider circuit");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void Circuit::phase(Qubit q, int m) {
  switch (((m % 8) + 8) % 8) {
    case 0: break;
    case 1: add(GateKind::T, q); break;
    case 2: add(GateKind::S, q); break;
    case 3: add(GateKind::S, q); add(GateKind::T, q); break;
    case 4: add(GateKind::Z, q); break;
    case 5: add(GateKind::Z, q); add(GateKind::T, q); break;
    case 6: add(GateKind::Sdg, q); break;
    case 7: add(GateKind::Tdg, q); break;
  }
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.width() != b.width()) throw std::invalid_argument("compose: width mismatch");
  if (a.roles() != b.roles()) throw std::invalid_argument("compose: role mismatch");
  Circuit r = a;
  r.append(b);
  return r;
}

Circuit invert(const Circuit& c) {
  Circuit r(c.width());
  for (int q = 0; q < c.width(); ++q) r.set_role(q, c.role(q));
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) r.append(it->inverse());
  return r;
}

GateStats& GateStats::operator+=(const GateStats& o) {
  total += o.total;
  t_count += o.t_count;
  width = std::max(width, o.width);
  for (std::size_t i = 0; i < kGateKindCount; ++i) histogram[i] += o.histogram[i];
  return *this;
}

GateStats gate_stats(const Circuit& c) {
  GateStats s;
  s.width = c.width();
  s.total = c.size();
  for (const auto& g : c.gates()) ++s.histogram[static_cast<std::size_t>(g.kind)];
  s.t_count = s.count(GateKind::T) + s.count(GateKind::Tdg);
  return s;
}

}  // namespace ctsynth
