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

#include "qchan/reprs.hpp"

#include <cmath>
#include <string>

#include "qchan/errors.hpp"

namespace qchan {

KrausRep make_kraus(int d_in, int d_out, std::vector<Matrix> ops) {
  if (d_in <= 0 || d_out <= 0) {
    throw DimensionError("Kraus dimensions must be positive");
  }
  double biggest = 0.0;
  for (std::size_t j = 0; j < ops.size(); ++j) {
    if (ops[j].rows() != d_out || ops[j].cols() != d_in) {
      throw DimensionError("Kraus operator " + std::to_string(j) +
                           " is not d_out x d_in");
    }
    if (!ops[j].allFinite()) {
      throw ParameterError("Kraus operator " + std::to_string(j) +
                           " has non-finite entries");
    }
    biggest = std::max(biggest, ops[j].norm());
  }
  KrausRep k{d_in, d_out, {}};
  for (auto& a : ops) {
    if (a.norm() > 1e-14 * biggest) k.ops.push_back(std::move(a));
  }
  if (k.ops.empty()) throw ParameterError("Kraus list is empty or all zero");
  return k;
}

ChoiMatrix make_choi(int d_in, int d_out, Matrix mat) {
  if (d_in <= 0 || d_out <= 0) {
    throw DimensionError("Choi dimensions must be positive");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(d_in) * d_out;
  if (mat.rows() != n || mat.cols() != n) {
    throw DimensionError("Choi matrix is not (d_in*d_out) square");
  }
  if (!mat.allFinite()) throw ParameterError("Choi matrix has non-finite entries");
  return ChoiMatrix{d_in, d_out, std::move(mat)};
}

void validate(const HolevoForm& h, const Tolerance& tol) {
  if (h.d_in <= 0 || h.d_out <= 0) {
    throw DimensionError("Holevo dimensions must be positive");
  }
  if (h.pairs.empty()) throw ParameterError("Holevo form has no pairs");
  for (std::size_t j = 0; j < h.pairs.size(); ++j) {
    const auto& p = h.pairs[j];
    const std::string at = "Holevo pair " + std::to_string(j);
    if (p.F.rows() != h.d_in || p.F.cols() != h.d_in) {
      throw DimensionError(at + ": F is not d_in x d_in");
    }
    if (p.R.rows() != h.d_out || p.R.cols() != h.d_out) {
      throw DimensionError(at + ": R is not d_out x d_out");
    }
    if (!is_psd(p.F, tol)) throw NotCPError(at + ": F is not PSD");
    if (!is_psd(p.R, tol)) throw NotCPError(at + ": R is not PSD");
    if (std::abs(p.R.trace() - 1.0) > tol.eps_eq) {
      throw ParameterError(at + ": tr(R) != 1");
    }
  }
}

static void check_input(const KrausRep& k, const Matrix& t) {
  if (t.rows() != k.d_in || t.cols() != k.d_in) {
    throw DimensionError("argument is not d_in x d_in");
  }
}

Matrix apply(const KrausRep& k, const Matrix& t) {
  check_input(k, t);
  Matrix out = Matrix::Zero(k.d_out, k.d_out);
  for (const auto& a : k.ops) out += a * t * a.adjoint();
  return out;
}

Matrix apply(const ChoiMatrix& c, const Matrix& t) {
  if (t.rows() != c.d_in || t.cols() != c.d_in) {
    throw DimensionError("argument is not d_in x d_in");
  }
  Matrix out = Matrix::Zero(c.d_out, c.d_out);
  for (int i = 0; i < c.d_in; ++i) {
    for (int j = 0; j < c.d_in; ++j) {
      out += t(i, j) * c.mat.block(i * c.d_out, j * c.d_out, c.d_out, c.d_out);
    }
  }
  return out;
}

KrausRep dual(const KrausRep& k) {
  KrausRep out{k.d_out, k.d_in, {}};
  out.ops.reserve(k.ops.size());
  for (const auto& a : k.ops) out.ops.push_back(a.adjoint());
  return out;
}

KrausRep compose(const KrausRep& g, const KrausRep& f) {
  if (g.d_in != f.d_out) throw DimensionError("compose: dimension mismatch");
  std::vector<Matrix> ops;
  ops.reserve(g.ops.size() * f.ops.size());
  for (const auto& b : g.ops) {
    for (const auto& a : f.ops) ops.push_back(b * a);
  }
  return make_kraus(f.d_in, g.d_out, std::move(ops));
}

ChoiMatrix choi_from_kraus(const KrausRep& k) {
  const int n = k.d_in * k.d_out;
  Matrix c = Matrix::Zero(n, n);
  for (const auto& a : k.ops) {
    // w = sum_i e_i (x) A e_i, so C = sum |w><w|.
    Vector w(n);
    for (int i = 0; i < k.d_in; ++i) w.segment(i * k.d_out, k.d_out) = a.col(i);
    c += w * w.adjoint();
  }
  return ChoiMatrix{k.d_in, k.d_out, c};
}

KrausRep kraus_from_choi(const ChoiMatrix& c, const Tolerance& tol) {
  const int n = c.d_in * c.d_out;
  if (c.mat.rows() != n || c.mat.cols() != n) {
    throw DimensionError("Choi matrix is not (d_in*d_out) square");
  }
  if (!is_psd(c.mat, tol)) throw NotCPError("Choi matrix is not PSD");
  auto ed = eig_hermitian(c.mat, tol);
  std::vector<Matrix> ops;
  const double top = n > 0 ? ed.values(0) : 0.0;
  for (int k = 0; k < n; ++k) {
    const double lam = ed.values(k);
    if (!(top > 0.0) || lam <= tol.eps_rank * top) break;
    Matrix a(c.d_out, c.d_in);
    Vector w = std::sqrt(lam) * ed.vectors.col(k);
    for (int i = 0; i < c.d_in; ++i) a.col(i) = w.segment(i * c.d_out, c.d_out);
    // Largest-magnitude entry real positive; first one in row-major order
    // among (numerically) tied maxima.
    const double mx = a.cwiseAbs().maxCoeff();
    for (int r = 0, done = 0; r < c.d_out && !done; ++r) {
      for (int s = 0; s < c.d_in; ++s) {
        const double m = std::abs(a(r, s));
        if (m >= (1.0 - 1e-9) * mx) {
          a *= std::conj(a(r, s)) / m;
          a(r, s) = cplx(m, 0.0);
          done = 1;
          break;
        }
      }
    }
    ops.push_back(std::move(a));
  }
  if (ops.empty()) throw ParameterError("Choi matrix is zero");
  return KrausRep{c.d_in, c.d_out, std::move(ops)};
}

StinespringRep stinespring_from_kraus(const KrausRep& k) {
  const int env = static_cast<int>(k.ops.size());
  Matrix a(static_cast<Eigen::Index>(k.d_out) * env, k.d_in);
  for (int j = 0; j < env; ++j) {
    for (int r = 0; r < k.d_out; ++r) a.row(r * env + j) = k.ops[j].row(r);
  }
  return StinespringRep{k.d_in, k.d_out, env, a};
}

KrausRep kraus_from_stinespring(const StinespringRep& s) {
  if (s.d_in <= 0 || s.d_out <= 0 || s.env_dim <= 0 ||
      s.a.rows() != static_cast<Eigen::Index>(s.d_out) * s.env_dim ||
      s.a.cols() != s.d_in) {
    throw DimensionError("Stinespring operator has wrong shape");
  }
  std::vector<Matrix> ops(s.env_dim, Matrix(s.d_out, s.d_in));
  for (int j = 0; j < s.env_dim; ++j) {
    for (int r = 0; r < s.d_out; ++r) ops[j].row(r) = s.a.row(r * s.env_dim + j);
  }
  return make_kraus(s.d_in, s.d_out, std::move(ops));
}

KrausRep holevo_to_kraus(const HolevoForm& h, const Tolerance& tol) {
  validate(h, tol);
  std::vector<Matrix> ops;
  for (const auto& p : h.pairs) {
    auto ef = eig_hermitian(p.F, tol);
    auto er = eig_hermitian(p.R, tol);
    const double ftop = ef.values(0), rtop = er.values(0);
    for (int a = 0; a < h.d_in; ++a) {
      if (!(ftop > 0.0) || ef.values(a) <= tol.eps_rank * ftop) break;
      for (int b = 0; b < h.d_out; ++b) {
        if (!(rtop > 0.0) || er.values(b) <= tol.eps_rank * rtop) break;
        ops.push_back(std::sqrt(ef.values(a) * er.values(b)) *
                      er.vectors.col(b) * ef.vectors.col(a).adjoint());
      }
    }
  }
  return make_kraus(h.d_in, h.d_out, std::move(ops));
}

bool is_trace_preserving(const KrausRep& k, const Tolerance& tol) {
  Matrix s = Matrix::Zero(k.d_in, k.d_in);
  for (const auto& a : k.ops) s += a.adjoint() * a;
  return (s - Matrix::Identity(k.d_in, k.d_in)).norm() <= tol.eps_eq;
}

bool is_unital(const KrausRep& k, const Tolerance& tol) {
  Matrix s = Matrix::Zero(k.d_out, k.d_out);
  for (const auto& a : k.ops) s += a * a.adjoint();
  return (s - Matrix::Identity(k.d_out, k.d_out)).norm() <= tol.eps_eq;
}

int choi_rank(const KrausRep& k, const Tolerance& tol) {
  return rank_tol(choi_from_kraus(k).mat, tol);
}

Matrix superoperator(const KrausRep& k) {
  Matrix s = Matrix::Zero(k.d_out * k.d_out, k.d_in * k.d_in);
  for (const auto& a : k.ops) s += kron(a.conjugate(), a);
  return s;
}

ChoiMatrix choi_from_superoperator(const Matrix& s, int d_in, int d_out) {
  if (s.rows() != d_out * d_out || s.cols() != d_in * d_in) {
    throw DimensionError("superoperator has wrong shape");
  }
  const int n = d_in * d_out;
  Matrix c(n, n);
  for (int i = 0; i < d_in; ++i) {
    for (int j = 0; j < d_in; ++j) {
      c.block(i * d_out, j * d_out, d_out, d_out) =
          unvec(s.col(i + j * d_in), d_out, d_out);
    }
  }
  return ChoiMatrix{d_in, d_out, c};
}

double choi_distance(const KrausRep& a, const KrausRep& b) {
  if (a.d_in != b.d_in || a.d_out != b.d_out) {
    throw DimensionError("choi_distance: dimension mismatch");
  }
  return (choi_from_kraus(a).mat - choi_from_kraus(b).mat).norm();
}

std::vector<RankOneTerm> rank_one_terms(const KrausRep& k,
                                        const Tolerance& tol) {
  std::vector<RankOneTerm> out;
  for (const auto& a : k.ops) {
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (s.size() > 1 && s(1) > tol.eps_rank * s(0)) return {};
    Vector u = svd.matrixV().col(0);
    Vector v = s(0) * svd.matrixU().col(0);
    // Move the phase of u onto v so that A = |v><u| still holds.
    Vector u0 = u;
    fix_phase_first(u);
    cplx ph = 1.0;
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      if (std::abs(u0(i)) > 0.0) {
        ph = u(i) / u0(i);
        break;
      }
    }
    out.push_back({v * ph, u});
  }
  return out;
}

HolevoForm holevo_from_rank_one(const KrausRep& k, const Tolerance& tol) {
  auto terms = rank_one_terms(k, tol);
  if (terms.empty()) {
    throw PreconditionError("Kraus operators are not all rank one");
  }
  HolevoForm h{k.d_in, k.d_out, {}};
  for (const auto& t : terms) {
    const double n2 = t.v.squaredNorm();
    h.pairs.push_back({n2 * t.u * t.u.adjoint(), t.v * t.v.adjoint() / n2});
  }
  return h;
}

}  // namespace qchan
