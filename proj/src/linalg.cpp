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

#include "ctsynth/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ctsynth/errors.hpp"

namespace ctsynth {

RingMatrix RingMatrix::identity(std::size_t dim) {
  RingMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = RingScalar::one();
  return m;
}

RingMatrix RingMatrix::from_columns(const std::vector<RingVector>& columns) {
  RingMatrix m(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != columns.size()) throw DimensionError("from_columns: matrix is not square");
    for (std::size_t r = 0; r < columns.size(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RingVector RingMatrix::column(std::size_t col) const {
  return RingVector(data_.begin() + static_cast<std::ptrdiff_t>(col * dim_),
                    data_.begin() + static_cast<std::ptrdiff_t>((col + 1) * dim_));
}

RingMatrix RingMatrix::adjoint() const {
  RingMatrix r(dim_);
  for (std::size_t c = 0; c < dim_; ++c)
    for (std::size_t i = 0; i < dim_; ++i) r(c, i) = (*this)(i, c).conj();
  return r;
}

unsigned long RingMatrix::sde() const {
  unsigned long k = 0;
  for (const auto& x : data_) k = std::max(k, x.sde());
  return k;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix product: dimension mismatch");
  const std::size_t n = a.dim();
  RingMatrix r(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = 0; k < n; ++k) {
      if (b(k, c).is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (!a(i, k).is_zero()) r(i, c) += a(i, k) * b(k, c);
    }
  return r;
}

RingVector operator*(const RingMatrix& a, const RingVector& v) {
  if (a.dim() != v.size()) throw DimensionError("matrix-vector product: dimension mismatch");
  RingVector r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!a(i, k).is_zero()) r[i] += a(i, k) * v[k];
  }
  return r;
}

RingMatrix kron(const RingMatrix& a, const RingMatrix& b) {
  const std::size_t nb = b.dim();
  RingMatrix r(a.dim() * nb);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    }
  return r;
}

RingVector basis_vector(std::size_t dim, std::size_t index) {
  RingVector v(dim);
  v.at(index) = RingScalar::one();
  return v;
}

RingScalar inner_product(const RingVector& v, const RingVector& w) {
  if (v.size() != w.size()) throw DimensionError("inner_product: dimension mismatch");
  RingScalar acc;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero() && !w[i].is_zero()) acc += v[i].conj() * w[i];
  return acc;
}

unsigned long sde(const RingVector& v) {
  unsigned long k = 0;
  for (const auto& x : v) k = std::max(k, x.sde());
  return k;
}

bool is_unit(const RingVector& v) { return inner_product(v, v).is_one(); }

bool is_unitary_exact(const RingMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0 || (n & (n - 1)) != 0) return false;
  std::vector<RingVector> cols;
  cols.reserve(n);
  for (std::size_t c = 0; c < n; ++c) cols.push_back(m.column(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RingScalar ip = inner_product(cols[i], cols[j]);
      if (i == j ? !ip.is_one() : !ip.is_zero()) return false;
    }
  return true;
}

RingMatrix reflection_matrix(const RingVector& v) {
  RingMatrix r = RingMatrix::identity(v.size());
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    RingScalar vc = v[c].conj();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      RingScalar p = v[i] * vc;
      r(i, c) -= p + p;
    }
  }
  return r;
}

FloatMatrix reflection_matrix(const FloatVector& v) {
  const auto n = v.size();
  return FloatMatrix::Identity(n, n) - 2.0 * v * v.adjoint();
}

namespace {

std::complex<double> nearest(const RingScalar& x) {
  ComplexInterval ci = to_complex(x, 64);
  return {ci.re.to_double(), ci.im.to_double()};
}

// Accumulates an upward-rounded sum of squared entry-distance bounds.
class DistanceAccumulator {
 public:
  DistanceAccumulator() : sum_(256) {}

  void add(std::complex<double> a, const RingScalar& b) {
    ComplexInterval ci = to_complex(b, 80);
    const mpfr_prec_t p = std::max<mpfr_prec_t>(ci.re.precision(), 64) + 64;
    BigFloat dr = abs_diff_upper(a.real(), ci.re, p);
    BigFloat di = abs_diff_upper(a.imag(), ci.im, p);
    // |a - b| <= sqrt(dr^2 + di^2) + radius
    BigFloat mod(p);
    mpfr_sqr(dr.get(), dr.get(), MPFR_RNDU);
    mpfr_sqr(di.get(), di.get(), MPFR_RNDU);
    mpfr_add(mod.get(), dr.get(), di.get(), MPFR_RNDU);
    mpfr_sqrt(mod.get(), mod.get(), MPFR_RNDU);
    mpfr_add_d(mod.get(), mod.get(), ci.radius, MPFR_RNDU);
    mpfr_sqr(mod.get(), mod.get(), MPFR_RNDU);
    mpfr_add(sum_.get(), sum_.get(), mod.get(), MPFR_RNDU);
  }

  double result() const {
    BigFloat r(sum_);
    mpfr_sqrt(r.get(), r.get(), MPFR_RNDU);
    return r.to_double(MPFR_RNDU);
  }

 private:
  static BigFloat abs_diff_upper(double a, const BigFloat& c, mpfr_prec_t p) {
    BigFloat up(p), dn(p);
    mpfr_d_sub(up.get(), a, c.get(), MPFR_RNDU);
    mpfr_d_sub(dn.get(), a, c.get(), MPFR_RNDD);
    mpfr_abs(up.get(), up.get(), MPFR_RNDU);
    mpfr_abs(dn.get(), dn.get(), MPFR_RNDU);
    mpfr_max(up.get(), up.get(), dn.get(), MPFR_RNDU);
    return up;
  }

  BigFloat sum_;
};

}  // namespace

FloatMatrix to_float(const RingMatrix& m) {
  FloatMatrix r(m.dim(), m.dim());
  for (std::size_t c = 0; c < m.dim(); ++c)
    for (std::size_t i = 0; i < m.dim(); ++i)
      r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = nearest(m(i, c));
  return r;
}

FloatVector to_float(const RingVector& v) {
  FloatVector r(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) r(static_cast<Eigen::Index>(i)) = nearest(v[i]);
  return r;
}

double unitarity_defect(const FloatMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - FloatMatrix::Identity(u.rows(), u.cols())).norm();
}

bool is_unitary_float(const FloatMatrix& u, double tol) {
  const auto n = u.rows();
  if (n == 0 || n != u.cols() || (n & (n - 1)) != 0) return false;
  return unitarity_defect(u) <= tol;
}

double frobenius_distance(const FloatMatrix& a, const RingMatrix& b) {
  if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != b.dim())
    throw DimensionError("frobenius_distance: dimension mismatch");
  DistanceAccumulator acc;
  for (std::size_t c = 0; c < b.dim(); ++c)
    for (std::size_t i = 0; i < b.dim(); ++i)
      acc.add(a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)), b(i, c));
  return acc.result();
}

double euclidean_distance(const FloatVector& a, const RingVector& b) {
  if (static_cast<std::size_t>(a.size()) != b.size())
    throw DimensionError("euclidean_distance: dimension mismatch");
  DistanceAccumulator acc;
  for (std::size_t i = 0; i < b.size(); ++i) acc.add(a(static_cast<Eigen::Index>(i)), b[i]);
  return acc.result();
}

double reflection_distance_bound(const FloatVector& psi, const RingVector& phi) {
  if (static_cast<std::size_t>(psi.size()) != phi.size())
    throw DimensionError("reflection_distance_bound: dimension mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-8) throw std::invalid_argument("reflection_distance_bound: psi is not unit");
  if (!is_unit(phi)) throw std::invalid_argument("reflection_distance_bound: phi is not exactly unit");
  BigFloat r(64);
  mpfr_set_d(r.get(), euclidean_distance(psi, phi), MPFR_RNDU);
  BigFloat s(64);
  mpfr_sqrt_ui(s.get(), 8, MPFR_RNDU);
  mpfr_mul(r.get(), r.get(), s.get(), MPFR_RNDU);
  return r.to_double(MPFR_RNDU);
}

}  // namespace ctsynth
