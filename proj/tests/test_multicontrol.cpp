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

#include <vector>

#include "ctsynth/multicontrol.hpp"
#include "support.hpp"

using namespace ctsynth;
using namespace testsupport;

namespace {

// C^k X over wires 0..k, controls 0..k-1, target k.
RingMatrix mcx_oracle(int k) {
  const std::size_t all = (std::size_t{1} << k) - 1;
  return permutation(std::size_t{1} << (k + 1),
                     [&](std::size_t i) { return (i & all) == all ? i ^ (std::size_t{1} << k) : i; });
}

std::vector<Qubit> range(int n) {
  std::vector<Qubit> v;
  for (int i = 0; i < n; ++i) v.push_back(i);
  return v;
}

RingMatrix two_level_oracle(TwoLevelOp::Kind kind, std::size_t s, std::size_t t, int p, int width) {
  RingMatrix m = RingMatrix::identity(std::size_t{1} << width);
  using K = TwoLevelOp::Kind;
  if (kind == K::X) {
    m(s, s) = m(t, t) = RingScalar(0);
    m(s, t) = m(t, s) = RingScalar(1);
  } else if (kind == K::H) {
    m(s, s) = m(s, t) = m(t, s) = r2();
    m(t, t) = -r2();
  } else if (kind == K::Tpow) {
    m(t, t) = w(p);
  } else {
    m(s, s) = w(p);
  }
  return m;
}

}  // namespace

TEST_CASE("mcx with no controls is a single X") {
  Circuit c = mcx(1, {}, 0, std::nullopt);
  REQUIRE(c.size() == 1);
  CHECK(c.gates()[0] == Gate::single(GateKind::X, 0));
}

TEST_CASE("toffoli is exact with seven T gates") {
  std::vector<Qubit> ctl{0, 1};
  Circuit c = mcx(3, ctl, 2, std::nullopt);
  CHECK(exact_simulate(c) == mcx_oracle(2));
  CHECK(gate_stats(c).t_count == 7);
}

TEST_CASE("mcx is exact and restores the borrowed wire") {
  for (int k = 0; k <= 5; ++k) {
    std::vector<Qubit> ctl = range(k);
    Circuit c = mcx(k + 2, ctl, k, Qubit(k + 1));
    RingMatrix full = exact_simulate(c);
    for (std::size_t anc : {0, 1}) {
      bool closed = false;
      CHECK(ancilla_block(full, k + 1, anc, &closed) == mcx_oracle(k));
      CHECK(closed);
    }
  }
}

TEST_CASE("mcx rejects collisions and missing wires") {
  std::vector<Qubit> ctl{0, 1};
  CHECK_THROWS_AS(mcx(3, ctl, 1, std::nullopt), std::invalid_argument);
  std::vector<Qubit> three{0, 1, 2};
  CHECK_THROWS_AS(mcx(4, three, 3, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(mcx(4, three, 3, Qubit(2)), std::invalid_argument);
}

TEST_CASE("mcx cost grows linearly") {
  std::vector<std::size_t> counts;
  for (int k = 1; k <= 12; ++k) counts.push_back(mcx(k + 2, range(k), k, Qubit(k + 1)).size());
  for (int k = 1; k <= 12; ++k) CHECK(counts[static_cast<std::size_t>(k - 1)] <= 120u * static_cast<std::size_t>(k));
  // Constant increments once the split construction takes over.
  for (std::size_t i = 5; i + 1 < counts.size(); ++i) CHECK(counts[i + 1] - counts[i] == counts[5] - counts[4]);
}

TEST_CASE("reflection about zero") {
  Circuit one = reflection_about_zero(1);
  bool closed = false;
  RingMatrix full1 = exact_simulate(one);
  CHECK(ancilla_block(full1, 1, 0, &closed) == diag({RingScalar(-1), RingScalar(1)}));
  Circuit xzx(1);
  xzx.add(GateKind::X, 0);
  xzx.add(GateKind::Z, 0);
  xzx.add(GateKind::X, 0);
  CHECK(exact_simulate(xzx) == diag({RingScalar(-1), RingScalar(1)}));
  for (int n = 1; n <= 4; ++n) {
    RingMatrix full = exact_simulate(reflection_about_zero(n));
    std::vector<RingScalar> d(std::size_t{1} << n, RingScalar(1));
    d[0] = RingScalar(-1);
    for (std::size_t anc : {0, 1}) {
      CHECK(ancilla_block(full, n, anc, &closed) == diag(d));
      CHECK(closed);
    }
  }
}

TEST_CASE("two-level matrix table") {
  for (auto kind : {TwoLevelOp::Kind::X, TwoLevelOp::Kind::H, TwoLevelOp::Kind::Tpow}) {
    TwoLevelOp op{kind, 1, 3, 5, 2};
    CHECK(two_level_matrix(op) == two_level_oracle(kind, 1, 3, 5, 2));
  }
  CHECK(two_level_matrix(TwoLevelOp::phase_omega(2, 3, 2)) == two_level_oracle(TwoLevelOp::Kind::PhaseOmega, 2, 0, 3, 2));
}

TEST_CASE("two-level lowering examples") {
  Circuit h = lower_two_level(TwoLevelOp::h(0, 1, 1));
  REQUIRE(h.size() == 1);
  CHECK(h.gates()[0] == Gate::single(GateKind::H, 0));

  RingMatrix x = exact_simulate(lower_two_level(TwoLevelOp::x(0, 3, 2)));
  RingMatrix swap03 = permutation(4, [](std::size_t i) { return i == 0 ? 3 : i == 3 ? 0 : i; });
  for (std::size_t anc : {0, 1}) CHECK(ancilla_block(x, 2, anc) == swap03);

  RingMatrix p = exact_simulate(lower_two_level(TwoLevelOp::phase_omega(1, 3, 1)));
  bool closed = false;
  CHECK(ancilla_block(p, 1, 0, &closed) == diag({RingScalar(1), w(3)}));
  CHECK(closed);
}

TEST_CASE("two-level lowering is exact for every kind up to width 4") {
  Rng rng(41);
  using K = TwoLevelOp::Kind;
  for (int width = 1; width <= 4; ++width) {
    const std::size_t dim = std::size_t{1} << width;
    for (int trial = 0; trial < 12; ++trial) {
      std::size_t s = rng() % dim, t = rng() % dim;
      if (s == t) t = (s + 1) % dim;
      if (s > t) std::swap(s, t);
      const int p = static_cast<int>(rng() % 8);
      for (K kind : {K::X, K::H, K::Tpow, K::PhaseOmega}) {
        TwoLevelOp op{kind, kind == K::PhaseOmega ? t : s, t, p, width};
        RingMatrix target = two_level_oracle(kind, op.s, t, p, width);
        const bool clean = kind == K::Tpow || kind == K::PhaseOmega;
        const bool borrowed = width >= 3;
        RingMatrix full = exact_simulate(lower_two_level(op, borrowed));
        for (std::size_t anc = 0; anc < (borrowed ? 4u : 2u); ++anc) {
          if (clean && (anc & 1)) continue;  // the clean wire starts in |0>
          bool closed = false;
          CHECK(ancilla_block(full, width, anc, &closed) == target);
          CHECK(closed);
        }
      }
    }
  }
}

TEST_CASE("gray route") {
  GrayRoute r = gray_route(0b001, 0b110);
  CHECK(r.pivot == 1);
  CHECK(r.targets == std::vector<int>{0, 2});
  CHECK(r.pattern == 0b001);
  CHECK_THROWS(gray_route(3, 3));
}
