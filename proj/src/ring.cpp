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

#include "ctsynth/ring.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace ctsynth {

OmegaInt OmegaInt::omega_power(int m) {
  m = ((m % 8) + 8) % 8;
  OmegaInt r;
  r.c_[m % 4] = m < 4 ? 1 : -1;
  return r;
}

bool OmegaInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

bool OmegaInt::divisible_by_two() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return mpz_even_p(x.get_mpz_t()); });
}

bool OmegaInt::divisible_by_sqrt2() const {
  Integer s02 = c_[0] + c_[2];
  Integer s13 = c_[1] + c_[3];
  return mpz_even_p(s02.get_mpz_t()) && mpz_even_p(s13.get_mpz_t());
}

OmegaInt OmegaInt::div_sqrt2() const {
  // u / sqrt2 = u (w - w^3) / 2
  OmegaInt r(c_[1] - c_[3], c_[0] + c_[2], c_[1] + c_[3], c_[2] - c_[0]);
  for (auto& x : r.c_) mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 2);
  return r;
}

OmegaInt OmegaInt::times_sqrt2() const {
  return OmegaInt(c_[1] - c_[3], c_[0] + c_[2], c_[1] + c_[3], c_[2] - c_[0]);
}

OmegaInt OmegaInt::times_omega(int m) const {
  m = ((m % 8) + 8) % 8;
  OmegaInt r;
  for (int i = 0; i < 4; ++i) {
    int j = i + m;
    if ((j / 4) % 2 == 0)
      r.c_[j % 4] = c_[i];
    else
      r.c_[j % 4] = -c_[i];
  }
  return r;
}

OmegaInt OmegaInt::conj() const { return OmegaInt(c_[0], -c_[3], -c_[2], -c_[1]); }

OmegaInt OmegaInt::operator-() const { return OmegaInt(-c_[0], -c_[1], -c_[2], -c_[3]); }

OmegaInt& OmegaInt::operator+=(const OmegaInt& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

OmegaInt& OmegaInt::operator-=(const OmegaInt& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

OmegaInt& OmegaInt::operator*=(const OmegaInt& o) {
  // Negacyclic convolution.
  std::array<Integer, 4> r{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (i + j < 4)
        r[i + j] += c_[i] * o.c_[j];
      else
        r[i + j - 4] -= c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  return *this;
}

OmegaInt& OmegaInt::shift_left(unsigned long e) {
  for (auto& x : c_) mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), e);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const OmegaInt& x) {
  return os << '(' << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
}

// ---------------------------------------------------------------------------

RingScalar::RingScalar(OmegaInt num, unsigned long k) : num_(std::move(num)), k_(k) {
  canonicalize();
}

void RingScalar::canonicalize() {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  // Strip whole factors of 2 first, then at most one sqrt2.
  while (k_ >= 2 && num_.divisible_by_two()) {
    for (int i = 0; i < 4; ++i) mpz_divexact_ui(num_[i].get_mpz_t(), num_[i].get_mpz_t(), 2);
    k_ -= 2;
  }
  while (k_ > 0 && num_.divisible_by_sqrt2()) {
    num_ = num_.div_sqrt2();
    --k_;
  }
}

RingScalar canonicalize(const RingScalar& x) { return RingScalar(x.numerator(), x.sde()); }

bool RingScalar::is_one() const {
  return k_ == 0 && num_[0] == 1 && sgn(num_[1]) == 0 && sgn(num_[2]) == 0 && sgn(num_[3]) == 0;
}

OmegaInt RingScalar::numerator_at(unsigned long k) const {
  OmegaInt u = num_;
  unsigned long d = k - k_;
  if (d % 2 == 1) u = u.times_sqrt2();
  u.shift_left(d / 2);
  return u;
}

RingScalar RingScalar::div_sqrt2() const { return RingScalar(num_, k_ + 1); }

RingScalar RingScalar::norm_squared() const { return *this * conj(); }

RingScalar& RingScalar::operator+=(const RingScalar& o) {
  unsigned long k = std::max(k_, o.k_);
  num_ = numerator_at(k) + o.numerator_at(k);
  k_ = k;
  canonicalize();
  return *this;
}

RingScalar& RingScalar::operator-=(const RingScalar& o) {
  unsigned long k = std::max(k_, o.k_);
  num_ = numerator_at(k) - o.numerator_at(k);
  k_ = k;
  canonicalize();
  return *this;
}

RingScalar& RingScalar::operator*=(const RingScalar& o) {
  num_ *= o.num_;
  k_ += o.k_;
  canonicalize();
  return *this;
}

RingScalar RingScalar::from_quad(const QuadForm& q) {
  return RingScalar(OmegaInt(q.a, q.b + q.d, q.c, q.d - q.b), q.kappa);
}

QuadForm RingScalar::to_quad() const {
  OmegaInt u = num_;
  unsigned long kappa = k_;
  Integer s13 = u[1] + u[3];
  if (mpz_odd_p(s13.get_mpz_t())) {
    u = u.times_sqrt2();
    ++kappa;
  }
  QuadForm q;
  q.a = u[0];
  q.c = u[2];
  q.b = u[1] - u[3];
  q.d = u[1] + u[3];
  mpz_divexact_ui(q.b.get_mpz_t(), q.b.get_mpz_t(), 2);
  mpz_divexact_ui(q.d.get_mpz_t(), q.d.get_mpz_t(), 2);
  q.kappa = kappa;
  return q;
}

std::string RingScalar::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingScalar& x) {
  os << x.numerator();
  if (x.sde() > 0) os << "/sqrt2^" << x.sde();
  return os;
}

// ---------------------------------------------------------------------------

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

namespace {

struct Enclosure {
  BigFloat center;
  BigFloat radius;
};

// Encloses (p + q sqrt2) / 2^e.
Enclosure enclose(const Integer& p, const Integer& q, unsigned long e, int precision_bits) {
  std::size_t bits = std::max(mpz_sizeinbase(p.get_mpz_t(), 2), mpz_sizeinbase(q.get_mpz_t(), 2));
  mpfr_prec_t w = static_cast<mpfr_prec_t>(precision_bits + bits + 8);

  BigFloat lo(w), hi(w);
  if (sgn(q) == 0) {
    mpfr_set_z(lo.get(), p.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi.get(), p.get_mpz_t(), MPFR_RNDU);
  } else {
    BigFloat s_lo(w), s_hi(w);
    mpfr_sqrt_ui(s_lo.get(), 2, MPFR_RNDD);
    mpfr_sqrt_ui(s_hi.get(), 2, MPFR_RNDU);
    const bool pos = sgn(q) > 0;
    mpfr_mul_z(lo.get(), (pos ? s_lo : s_hi).get(), q.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(hi.get(), (pos ? s_hi : s_lo).get(), q.get_mpz_t(), MPFR_RNDU);
    mpfr_add_z(lo.get(), lo.get(), p.get_mpz_t(), MPFR_RNDD);
    mpfr_add_z(hi.get(), hi.get(), p.get_mpz_t(), MPFR_RNDU);
  }
  mpfr_div_2ui(lo.get(), lo.get(), e, MPFR_RNDD);
  mpfr_div_2ui(hi.get(), hi.get(), e, MPFR_RNDU);

  Enclosure out{BigFloat(w + 2), BigFloat(w)};
  mpfr_add(out.center.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(out.center.get(), out.center.get(), 1, MPFR_RNDN);
  BigFloat a(w), b(w);
  mpfr_sub(a.get(), hi.get(), out.center.get(), MPFR_RNDU);
  mpfr_sub(b.get(), out.center.get(), lo.get(), MPFR_RNDU);
  mpfr_max(out.radius.get(), a.get(), b.get(), MPFR_RNDU);
  return out;
}

}  // namespace

ComplexInterval to_complex(const RingScalar& x, int precision_bits) {
  if (precision_bits < 32) precision_bits = 32;
  const OmegaInt& u = x.numerator();
  // Re u = u0 + (u1 - u3)/sqrt2, Im u = u2 + (u1 + u3)/sqrt2, each over sqrt2^k.
  // With K = k + 1 this is (X sqrt2 + Y) / sqrt2^K.
  const unsigned long big_k = x.sde() + 1;
  auto part = [&](const Integer& xx, const Integer& yy) {
    if (big_k % 2 == 0) return enclose(yy, xx, big_k / 2, precision_bits);
    return enclose(Integer(2 * xx), yy, (big_k + 1) / 2, precision_bits);
  };
  Enclosure re = part(u[0], Integer(u[1] - u[3]));
  Enclosure im = part(u[2], Integer(u[1] + u[3]));

  ComplexInterval out{std::move(re.center), std::move(im.center), 0.0};
  BigFloat r(re.radius.precision());
  mpfr_add(r.get(), re.radius.get(), im.radius.get(), MPFR_RNDU);
  out.radius = r.to_double(MPFR_RNDU);
  return out;
}

}  // namespace ctsynth
