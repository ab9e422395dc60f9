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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "ctsynth/ring.hpp"

namespace ctsynth {

using RingVector = std::vector<RingScalar>;
using FloatMatrix = Eigen::MatrixXcd;
using FloatVector = Eigen::VectorXcd;

/// Dense square matrix over Z[i, 1/sqrt2], stored column-major.
class RingMatrix {
 public:
  RingMatrix() = default;
  explicit RingMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static RingMatrix identity(std::size_t dim);
  static RingMatrix from_columns(const std::vector<RingVector>& columns);

  std::size_t dim() const { return dim_; }
  const RingScalar& operator()(std::size_t row, std::size_t col) const { return data_[col * dim_ + row]; }
  RingScalar& operator()(std::size_t row, std::size_t col) { return data_[col * dim_ + row]; }

  RingVector column(std::size_t col) const;
  RingMatrix adjoint() const;
  /// Largest sde over all entries.
  unsigned long sde() const;

  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<RingScalar> data_;
};

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
RingVector operator*(const RingMatrix& a, const RingVector& v);
/// Kronecker product a (x) b; a acts on the high-order index bits.
RingMatrix kron(const RingMatrix& a, const RingMatrix& b);

RingVector basis_vector(std::size_t dim, std::size_t index);
/// Sum of conj(v_i) w_i.
RingScalar inner_product(const RingVector& v, const RingVector& w);
unsigned long sde(const RingVector& v);
bool is_unit(const RingVector& v);
bool is_unitary_exact(const RingMatrix& m);

/// I - 2 |v><v|, exact.
RingMatrix reflection_matrix(const RingVector& v);
FloatMatrix reflection_matrix(const FloatVector& v);

/// Nearest-double images.
FloatMatrix to_float(const RingMatrix& m);
FloatVector to_float(const RingVector& v);

/// ||U^dag U - I||_Fr.
double unitarity_defect(const FloatMatrix& u);
/// Near-unitarity gate for float input: defect <= tol.
bool is_unitary_float(const FloatMatrix& u, double tol = 1e-8);
inline constexpr double kFloatUnitaryTolerance = 1e-8;

/// Certified upper bound on ||a - b||_Fr. Zero exactly when a is the
/// exact double image of b.
double frobenius_distance(const FloatMatrix& a, const RingMatrix& b);
/// Certified upper bound on the Euclidean ||a - b||.
double euclidean_distance(const FloatVector& a, const RingVector& b);

/// 2 sqrt2 ||psi - phi||, an upper bound on ||R_psi - R_phi||_Fr.
/// Throws DimensionError for mismatched sizes and std::invalid_argument
/// when phi is not exactly unit or psi is off by more than 1e-8.
double reflection_distance_bound(const FloatVector& psi, const RingVector& phi);

}  // namespace ctsynth
