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

#include <cstdint>
#include <utility>

#include "ctsynth/ring.hpp"

namespace ctsynth {

/// a^2 + b^2 + c^2 + d^2 == n for the queried n.
struct FourSquare {
  Integer a, b, c, d;

  Integer sum() const { return a * a + b * b + c * c + d * d; }
  friend bool operator==(const FourSquare&, const FourSquare&) = default;
};

/// Miller-Rabin with bases drawn from a generator seeded by `seed`.
/// Error probability at most 4^-rounds; requires rounds >= 20.
bool is_probable_prime(const Integer& n, int rounds = 32, std::uint64_t seed = 0);

/// Writes a prime p = 1 (mod 4) as x^2 + y^2 with x >= y >= 0.
/// Throws std::invalid_argument when p is not 1 mod 4 or not prime.
std::pair<Integer, Integer> two_square_prime(const Integer& p, std::uint64_t seed = 0);

/// Lagrange decomposition of n >= 0, sorted a >= b >= c >= d >= 0.
/// Deterministic given the seed; the identity is checked before returning.
FourSquare four_square(const Integer& n, std::uint64_t seed = 0);

/// Floor of the square root.
Integer isqrt(const Integer& n);

}  // namespace ctsynth
