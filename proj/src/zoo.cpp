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

#include "qchan/zoo.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qchan/errors.hpp"
#include "qchan/random.hpp"

namespace qchan {

static void require_psd(const Matrix& a, const Tolerance& tol,
                        const char* who) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionError(std::string(who) + ": matrix must be square");
  }
  if (!is_psd(a, tol)) {
    throw ParameterError(std::string(who) + ": matrix must be PSD");
  }
}

Matrix schur_gram_factor(const Matrix& a, const Tolerance& tol) {
  require_psd(a, tol, "schur_gram_factor");
  return psd_sqrt(a.transpose());
}

KrausRep schur_map(const Matrix& a, const Tolerance& tol) {
  const Matrix b = schur_gram_factor(a, tol);
  const int d = static_cast<int>(a.rows());
  std::vector<Matrix> ops;
  for (int k = 0; k < d; ++k) {
    ops.push_back(b.row(k).transpose().asDiagonal());
  }
  return make_kraus(d, d, std::move(ops));
}

KrausRep schur_complement_from_factor(const Matrix& b) {
  const int d_in = static_cast<int>(b.cols());
  const int d_out = static_cast<int>(b.rows());
  std::vector<Matrix> ops;
  for (int j = 0; j < d_in; ++j) {
    ops.push_back(b.col(j) * basis_vector(d_in, j).adjoint());
  }
  return make_kraus(d_in, d_out, std::move(ops));
}

KrausRep schur_complement_map(const Matrix& a, const Tolerance& tol) {
  return schur_complement_from_factor(schur_gram_factor(a, tol));
}

HolevoForm schur_complement_holevo(const Matrix& a, const Tolerance& tol) {
  const Matrix b = schur_gram_factor(a, tol);
  const int d = static_cast<int>(a.rows());
  HolevoForm h{d, d, {}};
  const double top = a.diagonal().real().maxCoeff();
  for (int j = 0; j < d; ++j) {
    const double w = b.col(j).squaredNorm();
    if (!(top > 0.0) || w <= tol.eps_rank * top) continue;
    h.pairs.push_back(
        {w * unit_matrix(d, j, j), b.col(j) * b.col(j).adjoint() / w});
  }
  if (h.pairs.empty()) throw ParameterError("schur_complement_holevo: a = 0");
  return h;
}

static void check_dimension(int d) {
  if (d < 2) throw ParameterError("dimension must be at least 2");
}

ChoiMatrix werner_holevo_choi(int d, double lambda, WernerRange range) {
  check_dimension(d);
  const double hi = range == WernerRange::EntanglementBreaking ? 1.0 / d : 1.0;
  if (!(lambda >= -1.0 - 1e-12 && lambda <= hi + 1e-12)) {
    throw ParameterError("werner-holevo: lambda outside [-1, " +
                         std::string(range == WernerRange::EntanglementBreaking
                                         ? "1/d"
                                         : "1") +
                         "]");
  }
  const int n = d * d;
  Matrix c = Matrix::Zero(n, n);
  const Matrix id = Matrix::Identity(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Matrix out = -lambda * unit_matrix(d, j, i);
      if (i == j) out += id;
      c.block(i * d, j * d, d, d) = out / (d - lambda);
    }
  }
  return ChoiMatrix{d, d, c};
}

KrausRep werner_holevo(int d, double lambda, WernerRange range,
                       const Tolerance& tol) {
  return kraus_from_choi(werner_holevo_choi(d, lambda, range), tol);
}

ChoiMatrix phi_lambda_choi(int d, double lambda) {
  check_dimension(d);
  if (!(lambda >= -1.0 / (d + 1) - 1e-12 && lambda <= 1.0 + 1e-12)) {
    throw ParameterError("phi-lambda: lambda outside [-1/(d+1), 1]");
  }
  const int n = d * d;
  Matrix c = Matrix::Zero(n, n);
  const Matrix id = Matrix::Identity(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Matrix out = lambda * (unit_matrix(d, i, j) + unit_matrix(d, j, i));
      if (i == j) out += id;
      c.block(i * d, j * d, d, d) = out / (2.0 * lambda + d);
    }
  }
  return ChoiMatrix{d, d, c};
}

KrausRep phi_lambda(int d, double lambda, const Tolerance& tol) {
  return kraus_from_choi(phi_lambda_choi(d, lambda), tol);
}

KrausRep pinching(int d) {
  if (d < 1) throw ParameterError("pinching: dimension must be positive");
  std::vector<Matrix> ops;
  for (int i = 0; i < d; ++i) ops.push_back(unit_matrix(d, i, i));
  return make_kraus(d, d, std::move(ops));
}

KrausRep ad_operator(const Matrix& a) {
  if (a.size() == 0) throw DimensionError("ad_operator: empty matrix");
  return make_kraus(static_cast<int>(a.cols()), static_cast<int>(a.rows()),
                    {a});
}

DirectSum direct_sum_pure(const std::vector<Matrix>& vs) {
  if (vs.empty()) throw ParameterError("direct_sum_pure: no blocks");
  const int d = static_cast<int>(vs[0].rows());
  int total = 0;
  for (const auto& v : vs) {
    if (v.rows() != d || v.cols() < 1 || d < 1) {
      throw DimensionError("direct_sum_pure: blocks must share the row count");
    }
    total += static_cast<int>(v.cols());
  }
  const int k = static_cast<int>(vs.size());
  std::vector<Matrix> ops, gamma;
  int offset = 0;
  for (int i = 0; i < k; ++i) {
    const int di = static_cast<int>(vs[i].cols());
    Matrix w = Matrix::Zero(total, d);
    w.middleRows(offset, di) = vs[i].adjoint();
    ops.push_back(w);
    for (int a = 0; a < di; ++a) {
      gamma.push_back(basis_vector(k, i) *
                      basis_vector(total, offset + a).adjoint());
    }
    offset += di;
  }
  return DirectSum{make_kraus(d, total, std::move(ops)),
                   make_kraus(total, k, std::move(gamma))};
}

KrausRep cstar_extreme_gen(const std::vector<Vector>& us,
                           const std::vector<Vector>& vs,
                           const Tolerance& tol) {
  const int d2 = static_cast<int>(vs.size());
  if (d2 == 0 || static_cast<int>(us.size()) != d2) {
    throw ParameterError("cstar_extreme_gen: need as many u's as v's");
  }
  const int d1 = static_cast<int>(us[0].size());
  Matrix vmat(d2, d2);
  for (int i = 0; i < d2; ++i) {
    if (vs[i].size() != d2 || us[i].size() != d1 || d1 == 0) {
      throw DimensionError("cstar_extreme_gen: inconsistent vector sizes");
    }
    if (std::abs(us[i].norm() - 1.0) > tol.eps_eq) {
      throw ParameterError("cstar_extreme_gen: u vectors must be unit");
    }
    vmat.col(i) = vs[i];
  }
  if ((vmat.adjoint() * vmat - Matrix::Identity(d2, d2)).norm() > tol.eps_eq) {
    throw ParameterError("cstar_extreme_gen: v vectors must be orthonormal");
  }
  std::vector<Matrix> ops;
  for (int i = 0; i < d2; ++i) ops.push_back(vs[i] * us[i].adjoint());
  return make_kraus(d1, d2, std::move(ops));
}

KrausRep random_channel(int d_in, int d_out, int cr, std::uint64_t seed) {
  if (d_in < 1 || d_out < 1 || cr < 1 || cr > d_in * d_out ||
      cr * d_out < d_in) {
    throw ParameterError("random_channel: infeasible parameters");
  }
  Rng rng(seed);
  const Matrix g = rng.ginibre(d_out * cr, d_in);
  Eigen::SelfAdjointEigenSolver<Matrix> es(g.adjoint() * g);
  const Matrix inv_sqrt = es.eigenvectors() *
                          es.eigenvalues().cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() *
                          es.eigenvectors().adjoint();
  return kraus_from_stinespring(StinespringRep{d_in, d_out, cr, g * inv_sqrt});
}

namespace {

struct SebDraft {
  HolevoForm form;
  std::vector<int> class_of;    // class index of each pair
  std::vector<Matrix> support;  // orthonormal support of each class
};

SebDraft draft_seb(int d_in, int d_out, int classes, Rng& rng) {
  if (d_in < 1 || d_out < 1 || classes < 1 || classes > d_out) {
    throw ParameterError("random_degradable_seb: infeasible parameters");
  }
  const Matrix u = rng.haar_isometry(d_out, d_out);
  // Split the output basis into `classes` nonempty consecutive groups.
  std::vector<int> sizes(classes, 1);
  for (int extra = d_out - classes; extra > 0; --extra) {
    sizes[rng.uniform_int(0, classes - 1)] += 1;
  }
  SebDraft draft;
  draft.form = HolevoForm{d_in, d_out, {}};
  int offset = 0;
  for (int k = 0; k < classes; ++k) {
    const Matrix support = u.middleCols(offset, sizes[k]);
    offset += sizes[k];
    draft.support.push_back(support);
    const Vector uk = rng.ginibre(d_in, 1).col(0);
    const int members = rng.uniform_int(1, 3);
    for (int m = 0; m < members; ++m) {
      const double mag = 0.5 + rng.uniform();
      const double phase = 2.0 * std::numbers::pi * rng.uniform();
      const Vector uj = mag * std::polar(1.0, phase) * uk;
      const int rank = rng.uniform_int(1, sizes[k]);
      const Matrix rho = rng.random_state(sizes[k], rank);
      draft.form.pairs.push_back(
          {uj * uj.adjoint(), support * rho * support.adjoint()});
      draft.class_of.push_back(k);
    }
  }
  // Fisher-Yates shuffle so classes are interleaved.
  const int n = static_cast<int>(draft.form.pairs.size());
  for (int i = n - 1; i > 0; --i) {
    const int j = rng.uniform_int(0, i);
    std::swap(draft.form.pairs[i], draft.form.pairs[j]);
    std::swap(draft.class_of[i], draft.class_of[j]);
  }
  return draft;
}

}  // namespace

HolevoForm random_degradable_seb(int d_in, int d_out, int classes,
                                 std::uint64_t seed) {
  Rng rng(seed);
  return draft_seb(d_in, d_out, classes, rng).form;
}

HolevoForm random_seb_violator(int d_in, int d_out, int classes,
                               std::uint64_t seed) {
  if (d_in < 2 || classes < 2) {
    throw ParameterError("random_seb_violator: needs d_in >= 2, classes >= 2");
  }
  Rng rng(seed);
  SebDraft draft = draft_seb(d_in, d_out, classes, rng);
  int victim = -1, partner = -1;
  for (int j = 0; j < static_cast<int>(draft.class_of.size()); ++j) {
    if (draft.class_of[j] == 0 && victim < 0) victim = j;
    if (draft.class_of[j] == 1 && partner < 0) partner = j;
  }
  const Matrix& s0 = draft.support[0];
  const Vector x = s0 * rng.haar_isometry(static_cast<int>(s0.cols()), 1);
  // Top eigenvector of a class-1 state: never in the kernel of that class.
  Eigen::SelfAdjointEigenSolver<Matrix> es(draft.form.pairs[partner].R);
  const Vector y = es.eigenvectors().col(d_out - 1);
  const double theta = 0.3 + 0.9 * rng.uniform();
  Vector psi = std::cos(theta) * x + std::sin(theta) * y;
  psi.normalize();
  draft.form.pairs[victim].R = psi * psi.adjoint();
  return draft.form;
}

}  // namespace qchan
