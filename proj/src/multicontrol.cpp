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

#include "ctsynth/multicontrol.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctsynth {

namespace {

void require_distinct(std::span<const Qubit> controls, Qubit target, std::span<const Qubit> dirty) {
  std::vector<Qubit> all(controls.begin(), controls.end());
  all.push_back(target);
  all.insert(all.end(), dirty.begin(), dirty.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("multi-controlled gate: qubit collision");
}

// V-chain network: 4(k-2) Toffolis with k-2 dirty wires.
void append_mcx_chain(Circuit& out, std::span<const Qubit> x, Qubit target, std::span<const Qubit> a) {
  const int m = static_cast<int>(x.size());
  auto chain = [&] {
    for (int j = m - 2; j >= 2; --j) append_toffoli(out, x[j], a[j - 2], a[j - 1]);
    append_toffoli(out, x[0], x[1], a[0]);
    for (int j = 2; j <= m - 2; ++j) append_toffoli(out, x[j], a[j - 2], a[j - 1]);
  };
  append_toffoli(out, x[m - 1], a[m - 3], target);
  chain();
  append_toffoli(out, x[m - 1], a[m - 3], target);
  chain();
}

void append_mcx_unchecked(Circuit& out, std::span<const Qubit> controls, Qubit target,
                          std::span<const Qubit> dirty) {
  const std::size_t k = controls.size();
  if (k == 0) {
    out.add(GateKind::X, target);
    return;
  }
  if (k == 1) {
    out.cnot(controls[0], target);
    return;
  }
  if (k == 2) {
    append_toffoli(out, controls[0], controls[1], target);
    return;
  }
  if (dirty.size() >= k - 2) {
    append_mcx_chain(out, controls, target, dirty.first(k - 2));
    return;
  }
  if (dirty.empty()) throw std::invalid_argument("mcx: at least one borrowed wire is needed for 3+ controls");

  // Split the controls around one dirty wire a:
  //   B A B A with A = C^{m1}X(C1 -> a), B = C^{m2+1}X(C2 + a -> target).
  const Qubit a = dirty[0];
  const std::size_t m1 = (k + 1) / 2;
  std::span<const Qubit> c1 = controls.first(m1);
  std::span<const Qubit> c2 = controls.subspan(m1);
  std::span<const Qubit> rest = dirty.subspan(1);

  std::vector<Qubit> a_dirty(c2.begin(), c2.end());
  a_dirty.push_back(target);
  a_dirty.insert(a_dirty.end(), rest.begin(), rest.end());

  std::vector<Qubit> b_controls(c2.begin(), c2.end());
  b_controls.push_back(a);
  std::vector<Qubit> b_dirty(c1.begin(), c1.end());
  b_dirty.insert(b_dirty.end(), rest.begin(), rest.end());

  for (int rep = 0; rep < 2; ++rep) {
    append_mcx_unchecked(out, b_controls, target, b_dirty);
    append_mcx_unchecked(out, c1, a, a_dirty);
  }
}

}  // namespace

void append_toffoli(Circuit& out, Qubit a, Qubit b, Qubit c) {
  out.add(GateKind::H, c);
  out.cnot(b, c);
  out.add(GateKind::Tdg, c);
  out.cnot(a, c);
  out.add(GateKind::T, c);
  out.cnot(b, c);
  out.add(GateKind::Tdg, c);
  out.cnot(a, c);
  out.add(GateKind::T, b);
  out.add(GateKind::T, c);
  out.add(GateKind::H, c);
  out.cnot(a, b);
  out.add(GateKind::T, a);
  out.add(GateKind::Tdg, b);
  out.cnot(a, b);
}

void append_mcx(Circuit& out, std::span<const Qubit> controls, Qubit target, std::span<const Qubit> dirty) {
  require_distinct(controls, target, dirty);
  append_mcx_unchecked(out, controls, target, dirty);
}

void append_mch(Circuit& out, std::span<const Qubit> controls, Qubit target, std::span<const Qubit> dirty) {
  if (controls.empty()) {
    out.add(GateKind::H, target);
    return;
  }
  out.add(GateKind::Sdg, target);
  out.add(GateKind::H, target);
  out.add(GateKind::Tdg, target);
  append_mcx(out, controls, target, dirty);
  out.add(GateKind::T, target);
  out.add(GateKind::H, target);
  out.add(GateKind::S, target);
}

Circuit mcx(int width, std::span<const Qubit> controls, Qubit target, std::optional<Qubit> borrowed) {
  Circuit c(width);
  if (borrowed) {
    c.set_role(*borrowed, QubitRole::AncillaBorrowed);
    Qubit dirty[] = {*borrowed};
    append_mcx(c, controls, target, dirty);
  } else {
    append_mcx(c, controls, target, {});
  }
  return c;
}

void append_reflection_about_zero(Circuit& out, std::span<const Qubit> reg, std::optional<Qubit> borrowed) {
  if (reg.empty()) throw std::invalid_argument("reflection_about_zero: empty register");
  for (Qubit q : reg) out.add(GateKind::X, q);
  const Qubit last = reg.back();
  if (reg.size() == 1) {
    out.add(GateKind::Z, last);
  } else {
    out.add(GateKind::H, last);
    std::vector<Qubit> dirty;
    if (borrowed) dirty.push_back(*borrowed);
    append_mcx(out, reg.first(reg.size() - 1), last, dirty);
    out.add(GateKind::H, last);
  }
  for (Qubit q : reg) out.add(GateKind::X, q);
}

Circuit reflection_about_zero(int n) {
  if (n <= 0) throw std::invalid_argument("reflection_about_zero: width must be positive");
  Circuit c(n + 1);
  c.set_role(n, QubitRole::AncillaBorrowed);
  std::vector<Qubit> reg(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) reg[static_cast<std::size_t>(i)] = i;
  append_reflection_about_zero(c, reg, n);
  return c;
}

RingMatrix two_level_matrix(const TwoLevelOp& op) {
  const std::size_t dim = std::size_t{1} << op.width;
  RingMatrix m = RingMatrix::identity(dim);
  switch (op.kind) {
    case TwoLevelOp::Kind::X:
      m(op.s, op.s) = m(op.t, op.t) = RingScalar::zero();
      m(op.s, op.t) = m(op.t, op.s) = RingScalar::one();
      break;
    case TwoLevelOp::Kind::H:
      m(op.s, op.s) = m(op.s, op.t) = m(op.t, op.s) = RingScalar::inv_sqrt2();
      m(op.t, op.t) = -RingScalar::inv_sqrt2();
      break;
    case TwoLevelOp::Kind::Tpow:
      m(op.t, op.t) = RingScalar::omega(op.power);
      break;
    case TwoLevelOp::Kind::PhaseOmega:
      m(op.s, op.s) = RingScalar::omega(op.power);
      break;
  }
  return m;
}

GrayRoute gray_route(std::size_t s, std::size_t t) {
  const std::size_t d = s ^ t;
  if (d == 0) throw std::invalid_argument("gray_route: s == t");
  GrayRoute r{-1, {}, s};
  for (int b = 0; (std::size_t{1} << b) <= d; ++b)
    if ((d >> b) & 1 && !((s >> b) & 1)) {
      r.pivot = b;
      break;
    }
  if (r.pivot < 0) throw std::invalid_argument("gray_route: requires s < t");
  for (int b = 0; (std::size_t{1} << b) <= d; ++b)
    if ((d >> b) & 1 && b != r.pivot) r.targets.push_back(b);
  return r;
}

namespace {

void append_route(Circuit& out, const GrayRoute& route, std::span<const Qubit> reg) {
  for (int b : route.targets) out.cnot(reg[route.pivot], reg[b]);
}

// X on every wire (other than `skip`) whose bit in `pattern` is clear.
void append_pattern_flip(Circuit& out, std::size_t pattern, std::span<const Qubit> reg, int skip) {
  for (std::size_t b = 0; b < reg.size(); ++b)
    if (static_cast<int>(b) != skip && !((pattern >> b) & 1)) out.add(GateKind::X, reg[b]);
}

}  // namespace

void append_two_level(Circuit& out, const TwoLevelOp& op, std::span<const Qubit> reg, Qubit ancilla,
                      std::optional<Qubit> borrowed) {
  const std::size_t n = reg.size();
  if (static_cast<int>(n) != op.width) throw std::invalid_argument("two-level op: register width mismatch");
  const std::size_t dim = std::size_t{1} << n;
  if (op.s >= dim || (op.kind != TwoLevelOp::Kind::PhaseOmega && op.t >= dim))
    throw std::out_of_range("two-level op: basis index out of range");

  if (op.kind == TwoLevelOp::Kind::Tpow) {
    if (op.s >= op.t) throw std::invalid_argument("two-level op: requires s < t");
    append_two_level(out, TwoLevelOp::phase_omega(op.t, op.power, op.width), reg, ancilla, borrowed);
    return;
  }

  if (op.kind == TwoLevelOp::Kind::PhaseOmega) {
    const std::size_t s = op.s;
    if (n == 1) {
      if (s == 0) out.add(GateKind::X, reg[0]);
      out.phase(reg[0], op.power);
      if (s == 0) out.add(GateKind::X, reg[0]);
      return;
    }
    std::vector<Qubit> dirty;
    if (borrowed) dirty.push_back(*borrowed);
    append_pattern_flip(out, s, reg, -1);
    append_mcx(out, reg, ancilla, dirty);
    out.phase(ancilla, op.power);
    append_mcx(out, reg, ancilla, dirty);
    append_pattern_flip(out, s, reg, -1);
    return;
  }

  if (op.s >= op.t) throw std::invalid_argument("two-level op: requires s < t");
  const GrayRoute route = gray_route(op.s, op.t);
  std::vector<Qubit> controls;
  for (std::size_t b = 0; b < n; ++b)
    if (static_cast<int>(b) != route.pivot) controls.push_back(reg[b]);
  std::vector<Qubit> dirty{ancilla};
  if (borrowed) dirty.push_back(*borrowed);

  append_route(out, route, reg);
  append_pattern_flip(out, route.pattern, reg, route.pivot);
  if (op.kind == TwoLevelOp::Kind::X)
    append_mcx(out, controls, reg[route.pivot], dirty);
  else
    append_mch(out, controls, reg[route.pivot], dirty);
  append_pattern_flip(out, route.pattern, reg, route.pivot);
  append_route(out, route, reg);
}

Circuit lower_two_level(const TwoLevelOp& op, bool with_borrowed) {
  const int n = op.width;
  Circuit c(n + 1 + (with_borrowed ? 1 : 0));
  const bool clean = op.kind == TwoLevelOp::Kind::Tpow || op.kind == TwoLevelOp::Kind::PhaseOmega;
  c.set_role(n, clean ? QubitRole::AncillaClean : QubitRole::AncillaBorrowed);
  if (with_borrowed) c.set_role(n + 1, QubitRole::AncillaBorrowed);
  std::vector<Qubit> reg(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) reg[static_cast<std::size_t>(i)] = i;
  append_two_level(c, op, reg, n, with_borrowed ? std::optional<Qubit>(n + 1) : std::nullopt);
  return c;
}

}  // namespace ctsynth
