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

#include "ctsynth/stateprep.hpp"

#include <optional>
#include <stdexcept>

#include "ctsynth/errors.hpp"

namespace ctsynth {

namespace {

int bit_width_of(std::size_t dim) {
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

void require_unit_state(const RingVector& v) {
  const std::size_t dim = v.size();
  if (dim == 0 || (dim & (dim - 1)) != 0) throw std::invalid_argument("state dimension must be a power of two");
  if (!is_unit(v)) throw std::invalid_argument("state is not an exact unit vector");
}

// Odd residues mod 2 fall into three w-rotation orbits, told apart by the
// number of odd coefficients.
int residue_class(const OmegaInt& u) {
  int odd = 0;
  for (int i = 0; i < 4; ++i) odd += mpz_odd_p(u[i].get_mpz_t()) ? 1 : 0;
  return odd;
}

bool divisible_by_two_sqrt2(const OmegaInt& u) {
  if (!u.divisible_by_two()) return false;
  OmegaInt h = u;
  for (int i = 0; i < 4; ++i) mpz_divexact_ui(h[i].get_mpz_t(), h[i].get_mpz_t(), 2);
  return h.divisible_by_sqrt2();
}

// m with x + w^m y = 0 (mod 2).
std::optional<int> single_mix(const OmegaInt& x, const OmegaInt& y) {
  for (int m = 0; m < 8; ++m)
    if ((x + y.times_omega(m)).divisible_by_two()) return m;
  return std::nullopt;
}

// Two successive mixes on the same pair, for residues in different orbits.
std::optional<std::pair<int, int>> double_mix(const OmegaInt& x, const OmegaInt& y) {
  for (int m1 = 0; m1 < 8; ++m1) {
    OmegaInt ym = y.times_omega(m1);
    OmegaInt a = x + ym;
    OmegaInt b = x - ym;
    for (int m2 = 0; m2 < 8; ++m2) {
      OmegaInt bm = b.times_omega(m2);
      if (divisible_by_two_sqrt2(a + bm) && divisible_by_two_sqrt2(a - bm)) return std::make_pair(m1, m2);
    }
  }
  return std::nullopt;
}

}  // namespace

void apply_pair_mix(RingVector& v, const PairMix& mix) {
  const int pivot = gray_route(mix.s, mix.t).pivot;
  const std::size_t bit = std::size_t{1} << pivot;
  if (mix.phase % 8 != 0)
    for (std::size_t b = 0; b < v.size(); ++b)
      if ((b & bit) && !v[b].is_zero()) v[b] = v[b].times_omega(mix.phase);
  RingScalar x = v[mix.s];
  RingScalar y = v[mix.t];
  v[mix.s] = (x + y).div_sqrt2();
  v[mix.t] = (x - y).div_sqrt2();
}

void append_pair_mix(Circuit& out, const PairMix& mix, std::span<const Qubit> reg, Qubit dirty) {
  const int pivot = gray_route(mix.s, mix.t).pivot;
  out.phase(reg[static_cast<std::size_t>(pivot)], mix.phase);
  append_two_level(out, TwoLevelOp::h(mix.s, mix.t, static_cast<int>(reg.size())), reg, dirty);
}

std::vector<std::size_t> odd_entries(const RingVector& v) {
  const unsigned long k = sde(v);
  std::vector<std::size_t> out;
  if (k == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].sde() == k) out.push_back(i);  // canonical: odd at k iff its own sde is k
  return out;
}

RoundResult reduce_round(const RingVector& v) {
  require_unit_state(v);
  const unsigned long k = sde(v);
  if (k == 0) throw std::invalid_argument("reduce_round: vector already has sde 0");

  std::vector<std::size_t> odd = odd_entries(v);
  if (odd.size() % 2 != 0) throw SynthesisError("reduce_round: odd number of odd residues");

  // First-fit pairing inside each residue orbit, ascending index; whatever
  // is left over is paired across orbits in ascending order.
  std::vector<int> cls(odd.size());
  for (std::size_t i = 0; i < odd.size(); ++i) cls[i] = residue_class(v[odd[i]].numerator_at(k));
  std::vector<bool> used(odd.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < odd.size(); ++j)
      if (!used[j] && cls[j] == cls[i]) {
        used[i] = used[j] = true;
        pairs.emplace_back(odd[i], odd[j]);
        break;
      }
  }
  std::vector<std::size_t> left;
  for (std::size_t i = 0; i < odd.size(); ++i)
    if (!used[i]) left.push_back(odd[i]);
  for (std::size_t i = 0; i + 1 < left.size(); i += 2) pairs.emplace_back(left[i], left[i + 1]);

  RoundResult out{v, {{}, k, 0}};
  RingVector& w = out.reduced;
  for (auto [s, t] : pairs) {
    OmegaInt x = w[s].numerator_at(k);
    OmegaInt y = w[t].numerator_at(k);
    if (auto m = single_mix(x, y)) {
      out.step.mixes.push_back({s, t, *m});
    } else if (auto mm = double_mix(x, y)) {
      out.step.mixes.push_back({s, t, mm->first});
      apply_pair_mix(w, out.step.mixes.back());
      out.step.mixes.push_back({s, t, mm->second});
    } else {
      throw SynthesisError("reduce_round: no residue pairing for entries " + std::to_string(s) + " and " +
                           std::to_string(t));
    }
    apply_pair_mix(w, out.step.mixes.back());
  }
  out.step.sde_after = sde(w);
  if (out.step.sde_after >= k) throw SynthesisError("reduce_round: denominator exponent did not drop");
  return out;
}

void append_prepare_state(Circuit& out, const RingVector& phi, std::span<const Qubit> reg, Qubit dirty) {
  require_unit_state(phi);
  if (bit_width_of(phi.size()) != static_cast<int>(reg.size()))
    throw std::invalid_argument("prepare_state: register width does not match the state");

  // Record the reduction phi -> |0..0>, then emit its inverse.
  Circuit reduction(out.width());
  RingVector v = phi;
  while (sde(v) > 0) {
    RoundResult r = reduce_round(v);
    for (const PairMix& mix : r.step.mixes) append_pair_mix(reduction, mix, reg, dirty);
    v = std::move(r.reduced);
  }

  // Now v = w^l |s>.
  std::size_t s = 0;
  while (v[s].is_zero()) ++s;
  int l = -1;
  for (int m = 0; m < 8; ++m)
    if (v[s] == RingScalar::omega(m)) l = m;
  if (l < 0) throw SynthesisError("prepare_state: residual entry is not a power of w");

  if (s == 0) {
    reduction.add(GateKind::X, reg[0]);
    reduction.phase(reg[0], -l);
    reduction.add(GateKind::X, reg[0]);
  } else {
    std::size_t q = 0;
    while (!((s >> q) & 1)) ++q;
    reduction.phase(reg[q], -l);
    for (std::size_t b = 0; b < reg.size(); ++b)
      if ((s >> b) & 1) reduction.add(GateKind::X, reg[b]);
  }
  out.append(invert(reduction));
}

Circuit prepare_state(const RingVector& phi) {
  require_unit_state(phi);
  const int n = bit_width_of(phi.size());
  Circuit c(n + 1);
  c.set_role(n, QubitRole::AncillaBorrowed);
  std::vector<Qubit> reg(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) reg[static_cast<std::size_t>(i)] = i;
  append_prepare_state(c, phi, reg, n);
  return c;
}

}  // namespace ctsynth
