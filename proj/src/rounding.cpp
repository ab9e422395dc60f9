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

#include "ctsynth/rounding.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ctsynth/errors.hpp"

namespace ctsynth {

namespace {

constexpr double kNormTolerance = 1e-8;

Integer truncated(double x, int m) {
  Integer out;
  mpz_set_d(out.get_mpz_t(), std::ldexp(x, m));  // truncates toward zero
  return out;
}

RingScalar gaussian_over_pow2(const Integer& re, const Integer& im, int m) {
  return RingScalar(OmegaInt(re, 0, im, 0), 2UL * static_cast<unsigned long>(m));
}

void shrink_toward_zero(Integer& v) {
  if (v > 0)
    --v;
  else if (v < 0)
    ++v;
}

}  // namespace

int choose_precision(int n_qubits, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw PrecisionRangeError("eps must lie in (0, 1]");
  if (n_qubits < 0) throw std::invalid_argument("qubit count must be non-negative");
  const double v = n_qubits / 2.0 + 2.0 * std::log2(1.0 / eps);
  return static_cast<int>(std::ceil(v - 1e-12)) + 5;
}

double rounding_error_bound(int n_qubits, int m) {
  return 2.0 * std::ldexp(1.0, n_qubits - 2 * m) + 2.0 * std::sqrt(2.0) * std::pow(2.0, n_qubits / 2.0 - m);
}

std::size_t zero_count(const FloatVector& psi) {
  std::size_t z = 0;
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    if (psi(i) == std::complex<double>(0.0, 0.0)) ++z;
  return z;
}

RoundingPlan plan_rounding(const FloatVector& psi, int m, double epsilon_target) {
  if (m < 1) throw std::invalid_argument("rounding precision m must be at least 1");
  std::vector<std::size_t> zeros;
  for (Eigen::Index i = 0; i < psi.size() && zeros.size() < 2; ++i)
    if (psi(i) == std::complex<double>(0.0, 0.0)) zeros.push_back(static_cast<std::size_t>(i));
  if (zeros.size() < 2) throw std::invalid_argument("vector has fewer than two zero coordinates");
  return {m, zeros[0], zeros[1], epsilon_target};
}

RoundingResult round_unit_vector_detailed(const FloatVector& psi, const RoundingPlan& plan, std::uint64_t seed) {
  const auto dim = static_cast<std::size_t>(psi.size());
  if (plan.m < 1) throw std::invalid_argument("rounding precision m must be at least 1");
  if (plan.j >= dim || plan.l >= dim || plan.j == plan.l) throw std::invalid_argument("invalid rounding slots");
  if (std::abs(psi.norm() - 1.0) > kNormTolerance) throw std::invalid_argument("vector is not normalized");
  const std::complex<double> zero(0.0, 0.0);
  if (psi(static_cast<Eigen::Index>(plan.j)) != zero || psi(static_cast<Eigen::Index>(plan.l)) != zero)
    throw std::invalid_argument("rounding slots must be exactly zero");

  std::vector<Integer> re(dim), im(dim);
  Integer total = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    re[i] = truncated(psi(static_cast<Eigen::Index>(i)).real(), plan.m);
    im[i] = truncated(psi(static_cast<Eigen::Index>(i)).imag(), plan.m);
    total += re[i] * re[i] + im[i] * im[i];
  }
  Integer target = 1;
  mpz_mul_2exp(target.get_mpz_t(), target.get_mpz_t(), 2UL * static_cast<unsigned long>(plan.m));

  // Input normalized slightly above one can still overshoot; pull the
  // largest coordinate in until the residual is non-negative.
  while (total > target) {
    Integer* big = &re[0];
    for (std::size_t i = 0; i < dim; ++i) {
      if (abs(re[i]) > abs(*big)) big = &re[i];
      if (abs(im[i]) > abs(*big)) big = &im[i];
    }
    total -= (*big) * (*big);
    shrink_toward_zero(*big);
    total += (*big) * (*big);
  }

  RoundingResult out;
  out.residual = target - total;
  out.correction = four_square(out.residual, seed);
  re[plan.j] = out.correction.a;
  im[plan.j] = out.correction.b;
  re[plan.l] = out.correction.c;
  im[plan.l] = out.correction.d;
  out.phi.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) out.phi[i] = gaussian_over_pow2(re[i], im[i], plan.m);
  if (!is_unit(out.phi)) throw SynthesisError("rounded vector is not exactly unit");
  return out;
}

RingVector round_unit_vector(const FloatVector& psi, const RoundingPlan& plan, std::uint64_t seed) {
  return round_unit_vector_detailed(psi, plan, seed).phi;
}

std::pair<FloatVector, FloatVector> split_reflection(const FloatVector& psi) {
  const Eigen::Index d = psi.size();
  FloatVector lo = FloatVector::Zero(2 * d);
  FloatVector hi = FloatVector::Zero(2 * d);
  lo.head(d) = psi;
  hi.tail(d) = psi;
  return {std::move(lo), std::move(hi)};
}

}  // namespace ctsynth
