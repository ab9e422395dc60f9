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

#include "ctsynth/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace ctsynth {

namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                   43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

// Mersenne twister seeded from the caller's 64-bit seed.
class SeededRng : public gmp_randclass {
 public:
  explicit SeededRng(std::uint64_t seed) : gmp_randclass(gmp_randinit_mt) {
    this->seed(Integer(std::to_string(seed)));
  }
};

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square_u64(std::uint64_t n, std::uint64_t& root) {
  root = isqrt_u64(n);
  return root * root == n;
}

// Descending search, so the first hit is lexicographically largest.
FourSquare exhaustive_four_square(std::uint64_t n) {
  for (std::uint64_t a = isqrt_u64(n);; --a) {
    const std::uint64_t r1 = n - a * a;
    if (r1 > 3 * a * a) break;
    for (std::uint64_t b = std::min(a, isqrt_u64(r1));; --b) {
      const std::uint64_t r2 = r1 - b * b;
      if (r2 > 2 * b * b) break;
      for (std::uint64_t c = std::min(b, isqrt_u64(r2));; --c) {
        const std::uint64_t r3 = r2 - c * c;
        if (r3 > c * c) break;
        std::uint64_t d = 0;
        if (is_square_u64(r3, d))
          return {Integer(std::to_string(a)), Integer(std::to_string(b)), Integer(std::to_string(c)),
                  Integer(std::to_string(d))};
        if (c == 0) break;
      }
      if (b == 0) break;
    }
    if (a == 0) break;
  }
  throw std::logic_error("four_square: exhaustive search found no representation");
}

Integer random_with_parity(gmp_randclass& rng, const Integer& bound, int parity) {
  Integer x = rng.get_z_range(Integer(bound + 1));
  if (mpz_odd_p(x.get_mpz_t()) != parity) {
    if (sgn(x) == 0)
      x = 1;
    else
      x -= 1;
  }
  return x;
}

}  // namespace

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::invalid_argument("isqrt: negative argument");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_probable_prime(const Integer& n, int rounds, std::uint64_t seed) {
  if (rounds < 20) throw std::invalid_argument("is_probable_prime: rounds must be at least 20");
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  SeededRng rng(seed);
  const Integer n_minus_1 = n - 1;
  const Integer span = n - 3;
  Integer x;
  for (int i = 0; i < rounds; ++i) {
    Integer base = rng.get_z_range(span) + 2;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (unsigned long r = 1; r < s; ++r) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::pair<Integer, Integer> two_square_prime(const Integer& p, std::uint64_t seed) {
  if (sgn(p) <= 0 || mpz_fdiv_ui(p.get_mpz_t(), 4) != 1)
    throw std::invalid_argument("two_square_prime: argument must be 1 mod 4");
  if (!is_probable_prime(p, 32, seed)) throw std::invalid_argument("two_square_prime: argument is not prime");

  // Square root of -1 from a quadratic non-residue.
  SeededRng rng(seed);
  const Integer half = (p - 1) / 2;
  const Integer quarter = (p - 1) / 4;
  const Integer minus_one = p - 1;
  Integer t;
  for (;;) {
    Integer c = rng.get_z_range(Integer(p - 2)) + 2;
    if (c >= p) c = 2;
    Integer e;
    mpz_powm(e.get_mpz_t(), c.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
    if (e == minus_one) {
      mpz_powm(t.get_mpz_t(), c.get_mpz_t(), quarter.get_mpz_t(), p.get_mpz_t());
      break;
    }
  }

  // Hermite-Serret: Euclid on (p, t) until the remainder drops below sqrt(p).
  Integer a = p;
  Integer b = t;
  while (b * b > p) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  Integer x = b;
  Integer y = isqrt(Integer(p - x * x));
  if (x * x + y * y != p) throw std::logic_error("two_square_prime: descent failed");
  if (x < y) std::swap(x, y);
  return {x, y};
}

FourSquare four_square(const Integer& n, std::uint64_t seed) {
  if (sgn(n) < 0) throw std::invalid_argument("four_square: negative argument");
  if (sgn(n) == 0) return {0, 0, 0, 0};

  Integer m = n;
  unsigned long fours = 0;
  while (mpz_divisible_2exp_p(m.get_mpz_t(), 2)) {
    mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), 2);
    ++fours;
  }

  FourSquare out;
  if (m <= kExhaustiveLimit) {
    out = exhaustive_four_square(m.get_ui());
  } else {
    // m = x^2 + y^2 + p with p a prime that is 1 mod 4; parities of x, y are
    // forced by m mod 4 so that p lands in the right class.
    const unsigned long r = mpz_fdiv_ui(m.get_mpz_t(), 4);
    const int px = (r == 1) ? 0 : 1;
    const int py = (r == 3) ? 1 : 0;
    SeededRng rng(seed);
    std::uint64_t attempt = 0;
    for (;;) {
      ++attempt;
      Integer x = random_with_parity(rng, isqrt(m), px);
      Integer rest = m - x * x;
      if (sgn(rest) <= 0) continue;
      Integer y = random_with_parity(rng, isqrt(rest), py);
      Integer p = rest - y * y;
      if (sgn(p) <= 0) continue;
      if (p == 1) {
        out = {x, y, 1, 0};
        break;
      }
      if (!is_probable_prime(p, 32, seed + attempt)) continue;
      auto [u, v] = two_square_prime(p, seed + attempt);
      out = {x, y, u, v};
      break;
    }
  }

  std::array<Integer, 4> parts{out.a, out.b, out.c, out.d};
  for (auto& v : parts) {
    v = abs(v);
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), fours);
  }
  std::sort(parts.begin(), parts.end(), [](const Integer& l, const Integer& r) { return l > r; });
  FourSquare result{parts[0], parts[1], parts[2], parts[3]};
  if (result.sum() != n) throw std::logic_error("four_square: identity check failed");
  return result;
}

}  // namespace ctsynth
