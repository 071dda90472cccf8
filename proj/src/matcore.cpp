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

#include "qchan/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qchan/errors.hpp"

namespace qchan {

void Tolerance::validate() const {
  for (double e : {eps_rank, eps_psd, eps_eq}) {
    if (!(e > 0.0 && e <= 1e-3)) {
      throw ParameterError("tolerances must lie in (0, 1e-3]");
    }
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

static void check_bipartite(const Matrix& m, int d_a, int d_b) {
  if (d_a <= 0 || d_b <= 0 || m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(d_a) * d_b) {
    throw DimensionError("matrix is not square of size d_a*d_b");
  }
}

Matrix partial_trace(const Matrix& m, int d_a, int d_b, Side side) {
  check_bipartite(m, d_a, d_b);
  if (side == Side::Second) {
    Matrix out = Matrix::Zero(d_a, d_a);
    for (int i = 0; i < d_a; ++i) {
      for (int j = 0; j < d_a; ++j) {
        out(i, j) = m.block(i * d_b, j * d_b, d_b, d_b).trace();
      }
    }
    return out;
  }
  Matrix out = Matrix::Zero(d_b, d_b);
  for (int i = 0; i < d_a; ++i) out += m.block(i * d_b, i * d_b, d_b, d_b);
  return out;
}

Matrix partial_transpose(const Matrix& m, int d_a, int d_b) {
  check_bipartite(m, d_a, d_b);
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < d_a; ++i) {
    for (int j = 0; j < d_a; ++j) {
      out.block(i * d_b, j * d_b, d_b, d_b) =
          m.block(j * d_b, i * d_b, d_b, d_b);
    }
  }
  return out;
}

double hermitian_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  double scale = std::max(1.0, m.norm());
  return (m - m.adjoint()).norm() / scale;
}

bool is_hermitian(const Matrix& m, const Tolerance& tol) {
  return hermitian_defect(m) <= tol.eps_eq;
}

void fix_phase_first(Vector& v) {
  if (v.size() == 0) return;
  double cutoff = 1e-10 * v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double a = std::abs(v(i));
    if (a > cutoff && a > 0.0) {
      v *= std::conj(v(i)) / a;
      v(i) = cplx(a, 0.0);
      return;
    }
  }
}

EigenDecomposition eig_hermitian(const Matrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) throw DimensionError("eig_hermitian: not square");
  if (!is_hermitian(m, tol)) {
    throw ParameterError("eig_hermitian: input is not Hermitian");
  }
  Matrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::Index n = h.rows();
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = es.eigenvalues()(n - 1 - k);
    Vector v = es.eigenvectors().col(n - 1 - k);
    fix_phase_first(v);
    out.vectors.col(k) = v;
  }
  return out;
}

double min_eigenvalue(const Matrix& m) {
  Matrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

int rank_tol(const Matrix& m, const Tolerance& tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol.eps_rank * s(0)) ++r;
  }
  return r;
}

bool is_psd(const Matrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) return false;
  if (!is_hermitian(m, tol)) return false;
  return min_eigenvalue(m) >= -tol.eps_psd;
}

Matrix schur_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("schur_product: dimension mismatch");
  }
  return a.cwiseProduct(b);
}

double trace_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

Matrix unit_matrix(int d, int i, int j) {
  Matrix e = Matrix::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

Vector basis_vector(int d, int i) {
  Vector e = Vector::Zero(d);
  e(i) = 1.0;
  return e;
}

Matrix psd_sqrt(const Matrix& m) {
  Matrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  RealVector s = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * s.cast<cplx>().asDiagonal() *
         es.eigenvectors().adjoint();
}

Matrix pinv(const Matrix& m, double rel_cutoff) {
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  Matrix out = Matrix::Zero(m.cols(), m.rows());
  if (s.size() == 0 || s(0) == 0.0) return out;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_cutoff * s(0)) {
      out += svd.matrixV().col(i) * (1.0 / s(i)) *
             svd.matrixU().col(i).adjoint();
    }
  }
  return out;
}

Matrix column_space(const Matrix& m, double rel_cutoff) {
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  if (s.size() > 0 && s(0) > 0.0) {
    while (r < s.size() && s(r) > rel_cutoff * s(0)) ++r;
  }
  return svd.matrixU().leftCols(r);
}

Matrix orthonormal_completion(const Matrix& q, int n) {
  const Eigen::Index k = q.cols();
  if (k >= n) return Matrix(n, 0);
  Matrix proj = Matrix::Identity(n, n);
  if (k > 0) proj -= q * q.adjoint();
  Eigen::ColPivHouseholderQR<Matrix> qr(proj);
  Matrix full = qr.householderQ();
  Matrix out = full.leftCols(n - k);
  for (Eigen::Index c = 0; c < out.cols(); ++c) {
    Vector v = out.col(c);
    fix_phase_first(v);
    out.col(c) = v;
  }
  return out;
}

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw DimensionError("unvec: size mismatch");
  }
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

}  // namespace qchan
