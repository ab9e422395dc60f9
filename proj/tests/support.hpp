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

// Shared helpers for the unit and acceptance binaries. Everything here is
// built from first principles (explicit matrices, dense complex algebra) so
// it can serve as an oracle independent of the library's own lowering.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ctsynth/circuit.hpp"
#include "ctsynth/linalg.hpp"
#include "ctsynth/ring.hpp"

namespace testsupport {

using ctsynth::Circuit;
using ctsynth::FloatMatrix;
using ctsynth::FloatVector;
using ctsynth::GateKind;
using ctsynth::OmegaInt;
using ctsynth::RingMatrix;
using ctsynth::RingScalar;
using ctsynth::RingVector;
using Rng = std::mt19937_64;
using cd = std::complex<double>;

inline RingScalar w(int m) { return RingScalar::omega(m); }
inline RingScalar r2() { return RingScalar::inv_sqrt2(); }
inline RingScalar half() { return RingScalar(OmegaInt(1), 2); }
inline RingScalar gauss(long re, long im, unsigned long k) { return RingScalar(OmegaInt(re, 0, im, 0), k); }

inline RingMatrix ring_matrix(std::size_t dim, const std::vector<RingScalar>& row_major) {
  RingMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = row_major[r * dim + c];
  return m;
}

inline RingMatrix diag(const std::vector<RingScalar>& d) {
  RingMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

inline RingMatrix permutation(std::size_t dim, auto&& f) {
  RingMatrix m(dim);
  for (std::size_t c = 0; c < dim; ++c) m(f(c), c) = RingScalar::one();
  return m;
}

inline RingMatrix hadamard() { return ring_matrix(2, {r2(), r2(), r2(), -r2()}); }
inline RingMatrix tgate() { return diag({RingScalar::one(), w(1)}); }

// Dense 2x2 of a single-qubit kind, written out by hand.
inline Eigen::Matrix2cd single_matrix(GateKind k) {
  const double s = 1.0 / std::sqrt(2.0);
  const cd om = std::polar(1.0, M_PI / 4);
  Eigen::Matrix2cd m;
  switch (k) {
    case GateKind::H: m << s, s, s, -s; break;
    case GateKind::T: m << 1, 0, 0, om; break;
    case GateKind::Tdg: m << 1, 0, 0, std::conj(om); break;
    case GateKind::S: m << 1, 0, 0, cd(0, 1); break;
    case GateKind::Sdg: m << 1, 0, 0, cd(0, -1); break;
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::Z: m << 1, 0, 0, -1; break;
    default: m.setIdentity();
  }
  return m;
}

// Floating-point simulation by direct amplitude updates.
inline FloatMatrix dense_unitary(const Circuit& c) {
  const Eigen::Index dim = Eigen::Index{1} << c.width();
  FloatMatrix u = FloatMatrix::Identity(dim, dim);
  for (const auto& g : c.gates()) {
    const Eigen::Index tb = Eigen::Index{1} << g.target;
    if (g.kind == GateKind::CNOT) {
      const Eigen::Index cb = Eigen::Index{1} << g.control;
      for (Eigen::Index i = 0; i < dim; ++i)
        if ((i & cb) && !(i & tb)) u.row(i).swap(u.row(i | tb));
      continue;
    }
    const Eigen::Matrix2cd m = single_matrix(g.kind);
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (i & tb) continue;
      Eigen::RowVectorXcd a = u.row(i), b = u.row(i | tb);
      u.row(i) = m(0, 0) * a + m(0, 1) * b;
      u.row(i | tb) = m(1, 0) * a + m(1, 1) * b;
    }
  }
  return u;
}

inline Circuit random_clifford_t(int width, int gates, Rng& rng) {
  Circuit c(width);
  std::uniform_int_distribution<int> kind(0, width > 1 ? 7 : 6);
  std::uniform_int_distribution<int> wire(0, width - 1);
  const GateKind singles[] = {GateKind::H, GateKind::T, GateKind::Tdg, GateKind::S,
                              GateKind::Sdg, GateKind::X, GateKind::Z};
  for (int i = 0; i < gates; ++i) {
    const int k = kind(rng);
    if (k == 7) {
      int a = wire(rng), b = wire(rng);
      while (b == a) b = wire(rng);
      c.cnot(a, b);
    } else {
      c.add(singles[k], wire(rng));
    }
  }
  return c;
}

inline FloatMatrix haar_unitary(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  FloatMatrix z(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) z(i, j) = cd(g(rng), g(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<FloatMatrix> qr(z);
  FloatMatrix q = qr.householderQ();
  FloatMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const cd d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

inline FloatVector random_unit(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  FloatVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = cd(g(rng), g(rng));
  return v / v.norm();
}

// Data block of a matrix over data bits plus higher ancilla bits, for one
// ancilla value. `leak_free` reports whether that block is closed.
inline RingMatrix ancilla_block(const RingMatrix& full, int data_bits, std::size_t anc, bool* leak_free = nullptr) {
  const std::size_t d = std::size_t{1} << data_bits;
  RingMatrix out(d);
  bool ok = true;
  for (std::size_t c = 0; c < d; ++c) {
    const std::size_t col = anc * d + c;
    for (std::size_t r = 0; r < full.dim(); ++r) {
      if (r / d == anc)
        out(r % d, c) = full(r, col);
      else if (!full(r, col).is_zero())
        ok = false;
    }
  }
  if (leak_free) *leak_free = ok;
  return out;
}

inline std::size_t bit_count(std::size_t x) { return static_cast<std::size_t>(__builtin_popcountll(x)); }

}  // namespace testsupport
