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

#include "ctsynth/reflections.hpp"

#include <cmath>
#include <stdexcept>

#include "ctsynth/errors.hpp"
#include "ctsynth/multicontrol.hpp"
#include "ctsynth/stateprep.hpp"

namespace ctsynth {

namespace {

int log2_dim(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) throw DimensionError("matrix dimension must be a power of two");
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

}  // namespace

RingMatrix embedded_unitary(const RingMatrix& u) {
  const std::size_t d = u.dim();
  RingMatrix out(2 * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      out(r, d + c) = u(r, c);
      out(d + r, c) = u(c, r).conj();
    }
  return out;
}

FloatMatrix embedded_unitary(const FloatMatrix& u) {
  const Eigen::Index d = u.rows();
  FloatMatrix out = FloatMatrix::Zero(2 * d, 2 * d);
  out.block(0, d, d, d) = u;
  out.block(d, 0, d, d) = u.adjoint();
  return out;
}

HouseholderDecomposition householder_decompose(const RingMatrix& u) {
  const int n = log2_dim(u.dim());
  if (!is_unitary_exact(u)) throw NotUnitaryError("matrix is not exactly unitary");
  const std::size_t d = u.dim();
  HouseholderDecomposition out{n + 1, {}};
  const RingScalar h = RingScalar::inv_sqrt2();
  for (std::size_t j = 0; j < d; ++j) {
    RingVector w(2 * d);
    for (std::size_t i = 0; i < d; ++i) w[i] = -(u(i, j) * h);
    w[d + j] = h;
    out.reflections.push_back({std::move(w), j});
  }
  return out;
}

FloatHouseholderDecomposition householder_decompose(const FloatMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("matrix must be square");
  const int n = log2_dim(static_cast<std::size_t>(u.rows()));
  if (!is_unitary_float(u)) throw NotUnitaryError("matrix is not unitary within tolerance");
  const Eigen::Index d = u.rows();
  const double h = 1.0 / std::sqrt(2.0);
  FloatHouseholderDecomposition out{n + 1, {}};
  for (Eigen::Index j = 0; j < d; ++j) {
    FloatVector w = FloatVector::Zero(2 * d);
    w.head(d) = -h * u.col(j);
    w(d + j) = h;
    out.reflections.push_back({std::move(w), static_cast<std::size_t>(j)});
  }
  return out;
}

RingMatrix reflection_product(const HouseholderDecomposition& d) {
  RingMatrix out = RingMatrix::identity(std::size_t{1} << d.width);
  for (const auto& r : d.reflections) out = out * reflection_matrix(r.vector);
  return out;
}

FloatMatrix reflection_product(const FloatHouseholderDecomposition& d) {
  const Eigen::Index dim = Eigen::Index{1} << d.width;
  FloatMatrix out = FloatMatrix::Identity(dim, dim);
  for (const auto& r : d.reflections) out = out * reflection_matrix(r.vector);
  return out;
}

void append_reflection(Circuit& out, const RingVector& phi, std::span<const Qubit> reg, Qubit dirty) {
  Circuit prep(out.width());
  append_prepare_state(prep, phi, reg, dirty);
  out.append(invert(prep));
  append_reflection_about_zero(out, reg, dirty);
  out.append(prep);
}

Circuit synthesize_reflection(const RingVector& phi) {
  if (!is_unit(phi)) throw std::invalid_argument("reflection vector is not an exact unit vector");
  const int n = log2_dim(phi.size());
  Circuit c(n + 1);
  c.set_role(n, QubitRole::AncillaBorrowed);
  std::vector<Qubit> reg(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) reg[static_cast<std::size_t>(i)] = i;
  append_reflection(c, phi, reg, n);
  return c;
}

}  // namespace ctsynth
