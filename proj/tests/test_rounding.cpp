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

#include "ctsynth/errors.hpp"
#include "ctsynth/rounding.hpp"
#include "support.hpp"

using namespace ctsynth;
using namespace testsupport;

namespace {

FloatVector with_zero_slots(Eigen::Index dim, Rng& rng) {
  FloatVector v = random_unit(dim, rng);
  const Eigen::Index a = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(dim));
  Eigen::Index b = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(dim));
  if (b == a) b = (a + 1) % dim;
  v(a) = v(b) = 0;
  return v / v.norm();
}

}  // namespace

TEST_CASE("precision choice") {
  CHECK(choose_precision(2, 1.0) == 6);
  CHECK(choose_precision(2, 0.005) == 22);
  CHECK(choose_precision(6, 0.01) == 22);
  CHECK_THROWS_AS(choose_precision(2, 0.0), PrecisionRangeError);
  CHECK_THROWS_AS(choose_precision(2, 1.5), PrecisionRangeError);
  CHECK_THROWS_AS(choose_precision(2, -0.1), PrecisionRangeError);
}

TEST_CASE("dyadic unit vectors are fixed points") {
  FloatVector psi(4);
  psi << std::complex<double>(0.5, 0.5), std::complex<double>(0.5, -0.5), 0, 0;
  RoundingPlan plan = plan_rounding(psi, 5);
  CHECK(plan.j == 2);
  CHECK(plan.l == 3);
  RoundingResult r = round_unit_vector_detailed(psi, plan);
  CHECK(r.residual == 0);
  CHECK(r.correction == FourSquare{0, 0, 0, 0});
  RingVector expect{gauss(1, 1, 2), gauss(1, -1, 2), RingScalar(0), RingScalar(0)};
  CHECK(r.phi == expect);
}

TEST_CASE("basis vector rounds to itself") {
  FloatVector e3 = FloatVector::Unit(4, 3);
  RingVector phi = round_unit_vector(e3, RoundingPlan{7, 0, 1, 0.0});
  CHECK(phi == basis_vector(4, 3));
}

TEST_CASE("two-entry rotation at m = 22") {
  FloatVector psi(4);
  psi << std::cos(0.3), std::sin(0.3), 0, 0;
  RoundingPlan plan = plan_rounding(psi, 22);
  CHECK(plan.j == 2);
  CHECK(plan.l == 3);
  RingVector phi = round_unit_vector(psi, plan);
  CHECK(is_unit(phi));
  const double bound = rounding_error_bound(2, 22);
  CHECK(bound == doctest::Approx(2 * std::ldexp(1.0, 2 - 44) + 2 * std::sqrt(2.0) * std::ldexp(1.0, 1 - 22)));
  CHECK(bound < 1.35e-6);
  const double dist = euclidean_distance(psi, phi);
  CHECK(dist * dist <= bound);
  for (std::size_t i : {0u, 1u}) CHECK(phi[i].sde() <= 44);
}

TEST_CASE("rounded entries sit on the 2^-m gaussian grid") {
  Rng rng(3);
  FloatVector psi = with_zero_slots(8, rng);
  RoundingPlan plan = plan_rounding(psi, 12);
  RingVector phi = round_unit_vector(psi, plan, 9);
  for (const auto& x : phi) {
    QuadForm q = RingScalar(x.numerator_at(24), 24).to_quad();
    OmegaInt u = x.numerator_at(24);
    CHECK(u[1] == 0);
    CHECK(u[3] == 0);
    CHECK(q.b == 0);
    CHECK(q.d == 0);
  }
}

TEST_CASE("rounding rejects bad input") {
  FloatVector psi(4);
  psi << 0.6, 0.8, 0, 0;
  CHECK_THROWS_AS(round_unit_vector(psi, RoundingPlan{10, 0, 2, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(round_unit_vector(psi * 1.01, RoundingPlan{10, 2, 3, 0.0}), std::invalid_argument);
  FloatVector dense(2);
  dense << 0.6, 0.8;
  CHECK_THROWS_AS(plan_rounding(dense, 10), std::invalid_argument);
}

TEST_CASE("slightly long input still yields a non-negative residual") {
  FloatVector psi(4);
  psi << 1.0 + std::ldexp(1.0, -30), 0, 0, 0;
  RoundingResult r = round_unit_vector_detailed(psi, plan_rounding(psi, 40));
  CHECK(r.residual >= 0);
  CHECK(is_unit(r.phi));
}

TEST_CASE("squared distance bound on random vectors") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const int m = 8 + trial % 9;
    FloatVector psi = with_zero_slots(Eigen::Index{1} << n, rng);
    RingVector phi = round_unit_vector(psi, plan_rounding(psi, m), rng());
    CHECK(is_unit(phi));
    const double d = euclidean_distance(psi, phi);
    CHECK(d * d <= rounding_error_bound(n, m));
  }
}

TEST_CASE("reflection guarantee at the chosen precision") {
  Rng rng(7);
  for (double eps : {0.5, 0.1, 0.01, 1e-4}) {
    for (int n = 2; n <= 4; ++n) {
      FloatVector psi = with_zero_slots(Eigen::Index{1} << n, rng);
      RingVector phi = round_unit_vector(psi, plan_rounding(psi, choose_precision(n, eps)));
      CHECK(reflection_distance_bound(psi, phi) <= eps);
    }
  }
}

TEST_CASE("split reflection") {
  FloatVector e0(2);
  e0 << 1, 0;
  auto [a, b] = split_reflection(e0);
  CHECK(a == FloatVector(FloatVector::Unit(4, 0)));
  CHECK(b == FloatVector(FloatVector::Unit(4, 2)));
  FloatVector v(2);
  v << 0.6, 0.8;
  auto [lo, hi] = split_reflection(v);
  FloatVector elo(4), ehi(4);
  elo << 0.6, 0.8, 0, 0;
  ehi << 0, 0, 0.6, 0.8;
  CHECK(lo == elo);
  CHECK(hi == ehi);
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    FloatVector psi = random_unit(2, rng);
    auto [p0, p1] = split_reflection(psi);
    FloatMatrix expect = FloatMatrix::Zero(4, 4);
    expect.block(0, 0, 2, 2) = reflection_matrix(psi);
    expect.block(2, 2, 2, 2) = reflection_matrix(psi);
    CHECK((reflection_matrix(p0) * reflection_matrix(p1) - expect).norm() <= 1e-10);
    CHECK(zero_count(p0) >= 2);
    CHECK(zero_count(p1) >= 2);
  }
}
