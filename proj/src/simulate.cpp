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

#include <array>
#include <cstdint>
#include <vector>

#include "ctsynth/circuit.hpp"
#include "ctsynth/errors.hpp"

namespace ctsynth {

namespace {

struct Overflow {};

// Fixed-width coefficients; any overflow aborts and the caller retries with
// arbitrary precision.
struct SmallOps {
  using T = std::int64_t;
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T neg(T a) { return sub(0, a); }
  static bool even(T a) { return (a & 1) == 0; }
  static T half(T a) { return a / 2; }
  static T from(const Integer& v) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) throw Overflow{};
    return v.get_si();
  }
  static Integer to_integer(T v) { return Integer(static_cast<long>(v)); }
};

struct BigOps {
  using T = Integer;
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T neg(const T& a) { return -a; }
  static bool even(const T& a) { return mpz_even_p(a.get_mpz_t()); }
  static T half(const T& a) {
    T r;
    mpz_divexact_ui(r.get_mpz_t(), a.get_mpz_t(), 2);
    return r;
  }
  static T from(const Integer& v) { return v; }
  static Integer to_integer(const T& v) { return v; }
};

template <class Ops>
class StateEngine {
 public:
  using T = typename Ops::T;
  using Amp = std::array<T, 4>;

  explicit StateEngine(std::size_t dim) : amps_(dim, Amp{T(0), T(0), T(0), T(0)}) {}

  void load(const RingVector& v) {
    k_ = sde(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
      OmegaInt u = v[i].numerator_at(k_);
      for (int j = 0; j < 4; ++j) amps_[i][j] = Ops::from(u[j]);
    }
  }

  void load_basis(std::size_t index) {
    k_ = 0;
    amps_[index][0] = T(1);
  }

  RingVector store() const {
    RingVector out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i)
      out[i] = RingScalar(OmegaInt(Ops::to_integer(amps_[i][0]), Ops::to_integer(amps_[i][1]),
                                   Ops::to_integer(amps_[i][2]), Ops::to_integer(amps_[i][3])),
                          k_);
    return out;
  }

  void apply(const Gate& g) {
    const std::size_t dim = amps_.size();
    const std::size_t tb = std::size_t{1} << g.target;
    switch (g.kind) {
      case GateKind::X:
        for (std::size_t i = 0; i < dim; ++i)
          if (!(i & tb)) std::swap(amps_[i], amps_[i | tb]);
        return;
      case GateKind::CNOT: {
        const std::size_t cb = std::size_t{1} << g.control;
        for (std::size_t i = 0; i < dim; ++i)
          if ((i & cb) && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
        return;
      }
      case GateKind::H:
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & tb) continue;
          Amp& a = amps_[i];
          Amp& b = amps_[i | tb];
          for (int j = 0; j < 4; ++j) {
            T s = Ops::add(a[j], b[j]);
            b[j] = Ops::sub(a[j], b[j]);
            a[j] = std::move(s);
          }
        }
        ++k_;
        reduce();
        return;
      default: break;
    }
    int m = 0;
    switch (g.kind) {
      case GateKind::T: m = 1; break;
      case GateKind::Tdg: m = 7; break;
      case GateKind::S: m = 2; break;
      case GateKind::Sdg: m = 6; break;
      case GateKind::Z: m = 4; break;
      default: break;
    }
    for (std::size_t i = 0; i < dim; ++i)
      if (i & tb) rotate(amps_[i], m);
  }

 private:
  static void rotate(Amp& a, int m) {
    Amp r;
    for (int i = 0; i < 4; ++i) {
      const int j = i + m;
      if ((j / 4) % 2 == 0)
        r[j % 4] = std::move(a[i]);
      else
        r[j % 4] = Ops::neg(a[i]);
    }
    a = std::move(r);
  }

  // Divides out sqrt2 while every numerator allows it.
  void reduce() {
    while (k_ > 0) {
      for (const Amp& a : amps_)
        if (Ops::even(a[0]) != Ops::even(a[2]) || Ops::even(a[1]) != Ops::even(a[3])) return;
      for (Amp& a : amps_) {
        Amp r{Ops::half(Ops::sub(a[1], a[3])), Ops::half(Ops::add(a[0], a[2])),
              Ops::half(Ops::add(a[1], a[3])), Ops::half(Ops::sub(a[2], a[0]))};
        a = std::move(r);
      }
      --k_;
    }
  }

  std::vector<Amp> amps_;
  unsigned long k_ = 0;
};

template <class Ops>
RingVector run(const Circuit& c, const RingVector* state, std::size_t basis) {
  StateEngine<Ops> engine(std::size_t{1} << c.width());
  if (state)
    engine.load(*state);
  else
    engine.load_basis(basis);
  for (const Gate& g : c.gates()) engine.apply(g);
  return engine.store();
}

RingVector run_any(const Circuit& c, const RingVector* state, std::size_t basis) {
  try {
    return run<SmallOps>(c, state, basis);
  } catch (const Overflow&) {
    return run<BigOps>(c, state, basis);
  }
}

}  // namespace

RingMatrix exact_simulate(const Circuit& c, int width_cap) {
  if (c.width() > width_cap)
    throw WidthCapError("circuit width " + std::to_string(c.width()) + " exceeds the simulation cap " +
                        std::to_string(width_cap));
  const std::size_t dim = std::size_t{1} << c.width();
  std::vector<RingVector> cols(dim);
  for (std::size_t b = 0; b < dim; ++b) cols[b] = run_any(c, nullptr, b);
  return RingMatrix::from_columns(cols);
}

RingVector apply_circuit(const Circuit& c, const RingVector& state) {
  if (state.size() != (std::size_t{1} << c.width())) throw DimensionError("apply_circuit: state dimension mismatch");
  return run_any(c, &state, 0);
}

}  // namespace ctsynth
