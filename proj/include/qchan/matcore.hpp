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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qchan {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct Tolerance {
  double eps_rank = 1e-9;
  double eps_psd = 1e-9;
  double eps_eq = 1e-9;

  // Throws ParameterError unless every field lies in (0, 1e-3].
  void validate() const;
};

enum class Side { First, Second };

Matrix kron(const Matrix& a, const Matrix& b);

// Traces out one tensor factor of a (d_a*d_b)-square matrix.
Matrix partial_trace(const Matrix& m, int d_a, int d_b, Side side);

// Transpose on the first tensor factor: block (i,j) of the result is block
// (j,i) of m.
Matrix partial_transpose(const Matrix& m, int d_a, int d_b);

struct EigenDecomposition {
  RealVector values;  // descending
  Matrix vectors;     // columns, first nonzero component real positive
};

EigenDecomposition eig_hermitian(const Matrix& m, const Tolerance& tol = {});

int rank_tol(const Matrix& m, const Tolerance& tol = {});
bool is_psd(const Matrix& m, const Tolerance& tol = {});
Matrix schur_product(const Matrix& a, const Matrix& b);
double trace_norm(const Matrix& m);

// Small helpers shared by the other modules.

// Hermiticity defect ||m - m*||_F, relative to max(1, ||m||_F).
double hermitian_defect(const Matrix& m);
bool is_hermitian(const Matrix& m, const Tolerance& tol = {});
double min_eigenvalue(const Matrix& m);

// E_ij of size d x d (0-indexed).
Matrix unit_matrix(int d, int i, int j);
Vector basis_vector(int d, int i);

// Principal square root of a PSD matrix; tiny negative eigenvalues are clipped.
Matrix psd_sqrt(const Matrix& m);

// Moore-Penrose pseudo-inverse with singular values below eps_rank * s_max
// treated as zero.
Matrix pinv(const Matrix& m, double rel_cutoff);

// Orthonormal basis of the column space (rank determined by rel_cutoff).
Matrix column_space(const Matrix& m, double rel_cutoff);

// Columns spanning the orthogonal complement of the (orthonormal) columns of q
// in C^n. Deterministic: QR of a fixed seed matrix projected away from q.
Matrix orthonormal_completion(const Matrix& q, int n);

// Multiplies v by a phase so that its first entry with magnitude above
// 1e-10 * ||v||_inf is real and positive.
void fix_phase_first(Vector& v);

// Column-major vectorisation and its inverse.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, int rows, int cols);

}  // namespace qchan
