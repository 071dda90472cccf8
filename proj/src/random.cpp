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

#include "qchan/random.hpp"

#include <cmath>
#include <numbers>

#include "qchan/errors.hpp"

namespace qchan {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return cplx(re, im) / std::sqrt(2.0);
}

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw ParameterError("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Matrix Rng::ginibre(int rows, int cols) {
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = complex_normal();
  }
  return g;
}

Matrix Rng::haar_isometry(int rows, int cols) {
  if (cols > rows) throw ParameterError("haar_isometry: cols > rows");
  Matrix g = ginibre(rows, cols);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (int j = 0; j < cols; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix Rng::random_state(int d, int rank) {
  Matrix g = ginibre(d, rank);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace qchan
