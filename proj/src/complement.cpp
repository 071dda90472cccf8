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

#include "qchan/complement.hpp"

#include <cmath>

#include "qchan/errors.hpp"

namespace qchan {

KrausRep complement_from_kraus(const KrausRep& k) {
  const int env = static_cast<int>(k.ops.size());
  std::vector<Matrix> ops(k.d_out, Matrix(env, k.d_in));
  for (int r = 0; r < k.d_out; ++r) {
    for (int j = 0; j < env; ++j) ops[r].row(j) = k.ops[j].row(r);
  }
  return make_kraus(k.d_in, env, std::move(ops));
}

ComplementPair complement_pair(const KrausRep& k) {
  return ComplementPair{k, complement_from_kraus(k), stinespring_from_kraus(k)};
}

KrausRep minimal_complement(const KrausRep& k, const Tolerance& tol) {
  return complement_from_kraus(kraus_from_choi(choi_from_kraus(k), tol));
}

static Relation classify(double err, const Tolerance& tol) {
  if (err <= tol.eps_eq) return Relation::Related;
  if (err <= std::sqrt(tol.eps_eq)) return Relation::Indeterminate;
  return Relation::NotRelated;
}

// Rows are environment indices, columns run over (output row, input column).
static Matrix env_slices(const StinespringRep& s) {
  Matrix m(s.env_dim, static_cast<Eigen::Index>(s.d_out) * s.d_in);
  for (int j = 0; j < s.env_dim; ++j) {
    for (int r = 0; r < s.d_out; ++r) {
      m.block(j, static_cast<Eigen::Index>(r) * s.d_in, 1, s.d_in) =
          s.a.row(static_cast<Eigen::Index>(r) * s.env_dim + j);
    }
  }
  return m;
}

IsometryResult connecting_isometry(const StinespringRep& s1,
                                   const StinespringRep& s2,
                                   const Tolerance& tol) {
  if (s1.d_in != s2.d_in || s1.d_out != s2.d_out) {
    throw DimensionError("connecting_isometry: input/output dimensions differ");
  }
  for (const auto* s : {&s1, &s2}) {
    if (s->a.rows() != static_cast<Eigen::Index>(s->d_out) * s->env_dim ||
        s->a.cols() != s->d_in) {
      throw DimensionError("connecting_isometry: malformed dilation");
    }
  }
  IsometryResult out;
  if (s1.env_dim > s2.env_dim) {
    out.note = "first environment is larger than the second";
    return out;
  }
  const Matrix m1 = env_slices(s1);
  const Matrix m2 = env_slices(s2);
  const Matrix vdet = m2 * pinv(m1, tol.eps_rank);
  const double scale = std::max(1.0, m2.norm());
  const double residual = (m2 - vdet * m1).norm() / scale;

  // V is fixed on the span used by s1; complete it isometrically elsewhere.
  const Matrix q1 = column_space(m1, tol.eps_rank);
  const Matrix image = vdet * q1;
  Matrix v = image * q1.adjoint();
  const int free_cols = s1.env_dim - static_cast<int>(q1.cols());
  if (free_cols > 0) {
    const Matrix dom = orthonormal_completion(q1, s1.env_dim);
    const Matrix img_basis = column_space(image, tol.eps_rank);
    const Matrix cod = orthonormal_completion(img_basis, s2.env_dim);
    v += cod.leftCols(free_cols) * dom.adjoint();
  }
  const double defect =
      (v.adjoint() * v - Matrix::Identity(s1.env_dim, s1.env_dim)).norm();
  out.v = v;
  out.residual = std::max(residual, defect / 10.0);
  out.status = classify(out.residual, tol);
  if (out.status != Relation::Related) {
    out.note = "no isometry reproduces the second dilation";
  }
  return out;
}

IsometryResult isometric_embedding(const KrausRep& from, const KrausRep& to,
                                   const Tolerance& tol) {
  IsometryResult out;
  if (from.d_in != to.d_in) {
    out.note = "input dimensions differ";
    return out;
  }
  const int r = from.d_out, m = to.d_out, d = from.d_in;
  if (m < r) {
    out.note = "target output dimension " + std::to_string(m) +
               " is smaller than " + std::to_string(r);
    return out;
  }
  // Intertwiner equation to(E_ab) V - V from(E_ab) = 0 on column-major vec(V).
  const Eigen::Index unknowns = static_cast<Eigen::Index>(m) * r;
  Matrix lin(static_cast<Eigen::Index>(d) * d * unknowns, unknowns);
  const Matrix im = Matrix::Identity(m, m), ir = Matrix::Identity(r, r);
  Eigen::Index row = 0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const Matrix e = unit_matrix(d, a, b);
      lin.middleRows(row, unknowns) =
          kron(ir, apply(to, e)) - kron(apply(from, e).transpose(), im);
      row += unknowns;
    }
  }
  Eigen::BDCSVD<Matrix> svd(lin, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  std::vector<Vector> null;
  for (Eigen::Index i = 0; i < unknowns; ++i) {
    const double si = i < s.size() ? s(i) : 0.0;
    if (si <= 1e-6 * std::max(1.0, smax)) null.push_back(svd.matrixV().col(i));
  }
  if (null.empty()) {
    out.note = "maps admit no nonzero intertwiner";
    return out;
  }
  // Fixed pseudo-random combinations; a generic one is injective whenever
  // an injective intertwiner exists.
  Matrix v0;
  bool injective = false;
  for (int attempt = 0; attempt < 4 && !injective; ++attempt) {
    Vector comb = Vector::Zero(unknowns);
    for (std::size_t i = 0; i < null.size(); ++i) {
      const double t = 1.0 + static_cast<double>(i) + 0.5 * attempt;
      comb += cplx(std::cos(2.3 * t), std::sin(1.7 * t + attempt)) * null[i];
    }
    v0 = unvec(comb, m, r);
    Eigen::JacobiSVD<Matrix> vs(v0);
    const auto& sv = vs.singularValues();
    injective = sv(r - 1) > 1e-8 * sv(0);
  }
  if (!injective) {
    out.note = "every intertwiner has a kernel";
    return out;
  }
  Eigen::JacobiSVD<Matrix> polar(v0, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Matrix w = polar.matrixU() * polar.matrixV().adjoint();

  const Matrix cf = choi_from_kraus(from).mat;
  const Matrix ct = choi_from_kraus(to).mat;
  const Matrix lift = kron(Matrix::Identity(d, d), w);
  const double scale = std::max(1.0, ct.norm());
  out.v = w;
  out.residual = (ct - lift * cf * lift.adjoint()).norm() / scale;
  out.status = classify(out.residual, tol);
  if (out.status != Relation::Related) {
    out.note = "best isometric intertwiner leaves a residual";
  }
  return out;
}

static Verdict to_verdict(Relation r) {
  switch (r) {
    case Relation::Related: return Verdict::True;
    case Relation::NotRelated: return Verdict::False;
    case Relation::Indeterminate: return Verdict::Indeterminate;
  }
  return Verdict::Indeterminate;
}

Certificate is_complementary_pair(const KrausRep& phi, const KrausRep& psi,
                                  const Tolerance& tol) {
  Certificate cert;
  cert.property = Property::Complementary;
  cert.tolerances = tol;
  cert.provenance = {"minimal-complement", "isometric-equivalence"};
  if (phi.d_in != psi.d_in) {
    cert.verdict = Verdict::False;
    cert.note = "input dimensions differ";
    return cert;
  }
  const KrausRep minimal = kraus_from_choi(choi_from_kraus(phi), tol);
  const KrausRep comp = complement_from_kraus(minimal);
  const IsometryResult rel = isometric_embedding(comp, psi, tol);
  cert.verdict = to_verdict(rel.status);
  cert.note = rel.note;
  cert.witness.scalars.push_back({"env_dim", static_cast<double>(comp.d_out)});
  if (rel.v.size() > 0) {
    cert.witness.scalars.push_back({"residual", rel.residual});
  }
  if (rel.status == Relation::Related) {
    cert.witness.matrices.push_back({"isometry", rel.v});
    // Joint dilation (I (x) V) a_min: environment trace gives phi, output
    // trace gives psi.
    const StinespringRep smin = stinespring_from_kraus(minimal);
    const int r = smin.env_dim, m = psi.d_out;
    Matrix joint(static_cast<Eigen::Index>(phi.d_out) * m, phi.d_in);
    for (int s = 0; s < phi.d_out; ++s) {
      joint.middleRows(static_cast<Eigen::Index>(s) * m, m) =
          rel.v * smin.a.middleRows(static_cast<Eigen::Index>(s) * r, r);
    }
    cert.witness.matrices.push_back({"joint_dilation", joint});
  } else if (rel.status == Relation::NotRelated && cert.note.empty()) {
    cert.note = "no isometry maps the minimal complement onto the map";
  }
  return cert;
}

Certificate is_self_complementary(const KrausRep& phi, const Tolerance& tol) {
  Certificate cert = is_complementary_pair(phi, phi, tol);
  cert.property = Property::SelfComplementary;
  return cert;
}

}  // namespace qchan
