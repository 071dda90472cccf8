// Copyright 2026 The qchan Authors
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


// Generators and naive oracles shared by the unit tests. The oracles are
// written from the defining formulas with explicit loops and deliberately do
// not call the library's reshaping code.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qchan/matcore.hpp"
#include "qchan/random.hpp"
#include "qchan/reprs.hpp"

namespace qtest {

using qchan::cplx;
using qchan::Matrix;
using qchan::Vector;

inline Matrix random_hermitian(qchan::Rng& rng, int d) {
  Matrix g = rng.ginibre(d, d);
  return (g + g.adjoint()) / 2.0;
}

inline Matrix random_psd(qchan::Rng& rng, int d, int rank) {
  Matrix g = rng.ginibre(d, rank);
  return g * g.adjoint();
}

// Generic CP map, not trace-preserving.
inline qchan::KrausRep random_cp(qchan::Rng& rng, int d_in, int d_out, int n) {
  std::vector<Matrix> ops;
  for (int j = 0; j < n; ++j) ops.push_back(rng.ginibre(d_out, d_in));
  return qchan::make_kraus(d_in, d_out, std::move(ops));
}

inline Matrix naive_apply(const qchan::KrausRep& k, const Matrix& t) {
  Matrix out = Matrix::Zero(k.d_out, k.d_out);
  for (const Matrix& a : k.ops)
    for (int r = 0; r < k.d_out; ++r)
      for (int c = 0; c < k.d_out; ++c)
        for (int i = 0; i < k.d_in; ++i)
          for (int j = 0; j < k.d_in; ++j)
            out(r, c) += a(r, i) * t(i, j) * std::conj(a(c, j));
  return out;
}

// sum_ij E_ij (x) Phi(E_ij), entry ((i,r),(j,c)) = Phi(E_ij)(r,c).
inline Matrix naive_choi(const qchan::KrausRep& k) {
  const int n = k.d_in * k.d_out;
  Matrix c = Matrix::Zero(n, n);
  for (int i = 0; i < k.d_in; ++i)
    for (int j = 0; j < k.d_in; ++j) {
      Matrix e = Matrix::Zero(k.d_in, k.d_in);
      e(i, j) = 1.0;
      Matrix b = naive_apply(k, e);
      for (int r = 0; r < k.d_out; ++r)
        for (int s = 0; s < k.d_out; ++s) c(i * k.d_out + r, j * k.d_out + s) = b(r, s);
    }
  return c;
}

// Largest entrywise distance between the two maps on the matrix-unit basis.
inline double basis_distance(const qchan::KrausRep& a, const qchan::KrausRep& b) {
  double worst = 0.0;
  for (int i = 0; i < a.d_in; ++i)
    for (int j = 0; j < a.d_in; ++j) {
      Matrix e = Matrix::Zero(a.d_in, a.d_in);
      e(i, j) = 1.0;
      worst = std::max(worst, (naive_apply(a, e) - naive_apply(b, e)).cwiseAbs().maxCoeff());
    }
  return worst;
}

inline Matrix diag(std::initializer_list<double> xs) {
  Matrix m = Matrix::Zero(xs.size(), xs.size());
  int i = 0;
  for (double x : xs) m(i, i) = x, ++i;
  return m;
}

inline Matrix unit(int d, int i, int j) {
  Matrix m = Matrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

inline Vector ket(int d, int i) {
  Vector v = Vector::Zero(d);
  v(i) = 1.0;
  return v;
}

// The measure-and-prepare channel on M3 -> M2 that sends e1 to e1 and both e2
// and e3 to the state e2, each with weight one half.
inline qchan::HolevoForm shared_state_holevo() {
  qchan::HolevoForm h{3, 2, {}};
  h.pairs.push_back({unit(3, 0, 0), unit(2, 0, 0)});
  h.pairs.push_back({unit(3, 1, 1) * 0.5, unit(2, 1, 1)});
  h.pairs.push_back({unit(3, 2, 2) * 0.5, unit(2, 1, 1)});
  return h;
}

}  // namespace qtest
