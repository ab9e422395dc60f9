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
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace ctsynth {

using Integer = mpz_class;

/// Element a0 + a1 w + a2 w^2 + a3 w^3 of Z[w], with w = exp(i pi / 4).
///
/// w^4 = -1 is the only relation, so the coefficient quadruple is unique.
class OmegaInt {
 public:
  OmegaInt() = default;
  OmegaInt(Integer a0, Integer a1, Integer a2, Integer a3)
      : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}
  explicit OmegaInt(long v) : c_{Integer(v), 0, 0, 0} {}

  /// w^m for any integer m.
  static OmegaInt omega_power(int m);

  const Integer& operator[](std::size_t i) const { return c_[i]; }
  Integer& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const;
  /// True iff every coefficient is even, i.e. the element lies in 2 Z[w].
  bool divisible_by_two() const;
  /// True iff a0+a2 and a1+a3 are both even.
  bool divisible_by_sqrt2() const;

  /// Exact quotient by sqrt(2); requires divisible_by_sqrt2().
  OmegaInt div_sqrt2() const;
  OmegaInt times_sqrt2() const;
  /// Multiplication by w^m: a signed rotation of the coefficients.
  OmegaInt times_omega(int m) const;
  /// Complex conjugation, w -> w^-1 = -w^3.
  OmegaInt conj() const;

  OmegaInt operator-() const;
  OmegaInt& operator+=(const OmegaInt& o);
  OmegaInt& operator-=(const OmegaInt& o);
  OmegaInt& operator*=(const OmegaInt& o);
  /// Multiplies every coefficient by 2^e.
  OmegaInt& shift_left(unsigned long e);

  friend OmegaInt operator+(OmegaInt a, const OmegaInt& b) { return a += b; }
  friend OmegaInt operator-(OmegaInt a, const OmegaInt& b) { return a -= b; }
  friend OmegaInt operator*(OmegaInt a, const OmegaInt& b) { return a *= b; }
  friend bool operator==(const OmegaInt& a, const OmegaInt& b) { return a.c_ == b.c_; }

 private:
  std::array<Integer, 4> c_{0, 0, 0, 0};
};

/// (a + b sqrt2) + i (c + d sqrt2), all over sqrt2^kappa.
struct QuadForm {
  Integer a, b, c, d;
  unsigned long kappa = 0;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

/// An element u / sqrt2^k of Z[i, 1/sqrt2], always kept canonical:
/// k == 0 or u is not divisible by sqrt2. Zero has k == 0.
class RingScalar {
 public:
  RingScalar() = default;
  explicit RingScalar(long v) : num_(v) {}
  RingScalar(OmegaInt num, unsigned long k);

  static RingScalar zero() { return RingScalar(); }
  static RingScalar one() { return RingScalar(1); }
  static RingScalar omega(int m) { return RingScalar(OmegaInt::omega_power(m), 0); }
  static RingScalar inv_sqrt2() { return RingScalar(OmegaInt(1), 1); }

  const OmegaInt& numerator() const { return num_; }
  /// Smallest denominator exponent.
  unsigned long sde() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  /// Numerator u' with value u' / sqrt2^k; requires k >= sde().
  OmegaInt numerator_at(unsigned long k) const;

  RingScalar conj() const { return RingScalar(num_.conj(), k_); }
  RingScalar div_sqrt2() const;
  RingScalar times_omega(int m) const { return RingScalar(num_.times_omega(m), k_); }
  /// |x|^2 as an exact ring element (real, imaginary part zero).
  RingScalar norm_squared() const;

  RingScalar operator-() const { return RingScalar(-num_, k_); }
  RingScalar& operator+=(const RingScalar& o);
  RingScalar& operator-=(const RingScalar& o);
  RingScalar& operator*=(const RingScalar& o);

  friend RingScalar operator+(RingScalar a, const RingScalar& b) { return a += b; }
  friend RingScalar operator-(RingScalar a, const RingScalar& b) { return a -= b; }
  friend RingScalar operator*(RingScalar a, const RingScalar& b) { return a *= b; }
  friend bool operator==(const RingScalar& a, const RingScalar& b) {
    return a.k_ == b.k_ && a.num_ == b.num_;
  }

  static RingScalar from_quad(const QuadForm& q);
  /// Smallest-kappa surface form of the value.
  QuadForm to_quad() const;

  std::string to_string() const;

 private:
  void canonicalize();

  OmegaInt num_;
  unsigned long k_ = 0;
};

/// Free-function spelling of the normal-form map. Values built through the
/// RingScalar constructors are already canonical, so this is a copy.
RingScalar canonicalize(const RingScalar& x);

std::ostream& operator<<(std::ostream& os, const OmegaInt& x);
std::ostream& operator<<(std::ostream& os, const RingScalar& x);

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }

 private:
  mpfr_t v_;
};

/// A complex point together with a radius: |true value - (re + i im)| <= radius.
struct ComplexInterval {
  BigFloat re;
  BigFloat im;
  /// Rounded up on conversion, so it stays a valid bound.
  double radius = 0.0;
};

/// Evaluates x with directed rounding. Radius <= 2^(4 - precision_bits) (1 + |x|).
ComplexInterval to_complex(const RingScalar& x, int precision_bits = 64);

}  // namespace ctsynth
