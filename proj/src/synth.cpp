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

#include "ctsynth/synth.hpp"

#include <cmath>
#include <stdexcept>

#include "ctsynth/errors.hpp"
#include "ctsynth/reflections.hpp"
#include "ctsynth/rounding.hpp"

namespace ctsynth {

namespace {

// Verification simulates wider circuits than the CLI default allows.
constexpr int kVerifyWidthCap = 12;

constexpr char kFlagConvention[] =
    "data on q[0..n-1], flag on q[n]; input |1>|x> with ancillas |0> yields |0>(U|x>)";

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t j) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (j + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<Qubit> wires(int count) {
  std::vector<Qubit> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

Circuit layout(int n, int ancillas) {
  Circuit c(n + 1 + ancillas);
  c.set_role(n, QubitRole::Flag);
  for (int a = 0; a < ancillas; ++a) c.set_role(n + 1 + a, QubitRole::AncillaBorrowed);
  return c;
}

void fill_common(SynthesisReport& r, const Circuit& c, int n) {
  r.qubits = n;
  r.dimension = std::size_t{1} << n;
  r.total = gate_stats(c);
  r.width = c.width();
  r.roles = c.roles();
  r.ancilla_count = c.ancilla_count();
  r.flag_convention = kFlagConvention;
  if (r.ancilla_count > kMaxAncillas) throw SynthesisError("ancilla budget exceeded");
}

int log2_dim(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) throw DimensionError("matrix dimension must be a power of two");
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

}  // namespace

RingMatrix exact_target(const RingMatrix& u, int width) {
  const int n = log2_dim(u.dim());
  const int anc = width - (n + 1);
  if (anc < 0) throw DimensionError("circuit narrower than the embedded unitary");
  return kron(RingMatrix::identity(std::size_t{1} << anc), embedded_unitary(u));
}

RingMatrix extract_flag_block(const Circuit& c, int n) {
  const std::size_t d = std::size_t{1} << n;
  if (c.width() < n + 1) throw DimensionError("circuit narrower than data plus flag");
  RingMatrix out(d);
  const std::size_t full = std::size_t{1} << c.width();
  for (std::size_t j = 0; j < d; ++j) {
    RingVector col = apply_circuit(c, basis_vector(full, d + j));
    for (std::size_t i = 0; i < d; ++i) out(i, j) = col[i];
  }
  return out;
}

SynthesisResult exact_synthesize(const RingMatrix& u, bool verify) {
  const int n = log2_dim(u.dim());
  HouseholderDecomposition dec = householder_decompose(u);

  SynthesisResult res{layout(n, 1), {}};
  const std::vector<Qubit> reg = wires(n + 1);
  const Qubit dirty = n + 1;
  for (const RingReflection& refl : dec.reflections) {
    Circuit part(res.circuit.width());
    append_reflection(part, refl.vector, reg, dirty);
    ReflectionReport rr;
    rr.column = refl.column;
    rr.sde = sde(refl.vector);
    rr.stats = gate_stats(part);
    res.report.reflections.push_back(rr);
    res.circuit.append(part);
  }

  SynthesisReport& r = res.report;
  r.mode = SynthesisReport::Mode::Exact;
  fill_common(r, res.circuit, n);
  if (verify) {
    if (!(exact_simulate(res.circuit, kVerifyWidthCap) == exact_target(u, res.circuit.width())))
      throw SynthesisError("exact synthesis failed re-simulation");
    r.verified = true;
    r.exact_equality = true;
  }
  return res;
}

SynthesisResult approx_synthesize(const FloatMatrix& u, double eps, std::uint64_t seed, bool verify) {
  if (!(eps > 0.0 && eps <= 1.0)) throw PrecisionRangeError("eps must lie in (0, 1]");
  if (u.rows() != u.cols()) throw DimensionError("matrix must be square");
  const int n = log2_dim(static_cast<std::size_t>(u.rows()));
  FloatHouseholderDecomposition dec = householder_decompose(u);

  const double per_eps = std::ldexp(eps, -n);
  bool any_split = false;
  for (const FloatReflection& refl : dec.reflections)
    if (zero_count(refl.vector) < 2) any_split = true;

  SynthesisResult res{layout(n, any_split ? 2 : 1), {}};
  SynthesisReport& r = res.report;
  r.mode = SynthesisReport::Mode::Approx;
  r.eps = eps;
  r.per_reflection_eps = per_eps;
  r.seed = seed;
  r.m = choose_precision(n + 1, per_eps);

  const std::vector<Qubit> reg = wires(n + 1);
  const std::vector<Qubit> wide = wires(n + 2);
  for (const FloatReflection& refl : dec.reflections) {
    Circuit part(res.circuit.width());
    ReflectionReport rr;
    rr.column = refl.column;
    if (zero_count(refl.vector) >= 2) {
      // With the extra wire present this reflection is I (x) R on a wider
      // space, which doubles its squared Frobenius error; halving its target
      // keeps the sum within budget.
      const double target = any_split ? per_eps / 2 : per_eps;
      rr.m = choose_precision(n + 1, target);
      RoundingPlan plan = plan_rounding(refl.vector, rr.m, target);
      RingVector phi = round_unit_vector(refl.vector, plan, derive_seed(seed, 2 * refl.column));
      append_reflection(part, phi, reg, any_split ? n + 2 : n + 1);
      rr.sde = sde(phi);
      rr.distance_bound = reflection_distance_bound(refl.vector, phi) * (any_split ? std::sqrt(2.0) : 1.0);
    } else {
      // Too few zero slots: I (x) R_psi = R_{|0 psi>} R_{|1 psi>} on one more wire.
      rr.split = true;
      rr.m = choose_precision(n + 2, per_eps / 2);
      auto [lo, hi] = split_reflection(refl.vector);
      int half = 0;
      for (const FloatVector* v : {&lo, &hi}) {
        RoundingPlan plan = plan_rounding(*v, rr.m, per_eps / 2);
        RingVector phi = round_unit_vector(*v, plan, derive_seed(seed, 2 * refl.column + static_cast<std::uint64_t>(half++)));
        append_reflection(part, phi, wide, n + 2);
        rr.sde = std::max(rr.sde, sde(phi));
        rr.distance_bound += reflection_distance_bound(*v, phi);
      }
    }
    rr.stats = gate_stats(part);
    r.distance_bound_sum += rr.distance_bound;
    r.reflections.push_back(rr);
    res.circuit.append(part);
  }

  fill_common(r, res.circuit, n);
  const double scale = std::ldexp(1.0, 2 * n) * n * (std::log2(1.0 / eps) + n);
  r.constant_c = static_cast<double>(r.total.total) / scale;
  if (verify) {
    r.distance = frobenius_distance(u, extract_flag_block(res.circuit, n));
    if (!(r.distance <= eps)) throw SynthesisError("certified distance exceeds the requested eps");
    r.verified = true;
  } else {
    r.distance = r.distance_bound_sum;
  }
  return res;
}

}  // namespace ctsynth
