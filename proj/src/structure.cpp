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

#include "qchan/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qchan/complement.hpp"
#include "qchan/errors.hpp"
#include "qchan/zoo.hpp"

namespace qchan {

namespace {

Certificate make_cert(Property p, const Tolerance& tol) {
  Certificate c;
  c.property = p;
  c.tolerances = tol;
  return c;
}

double rel_scale(const Matrix& m) { return std::max(1.0, m.norm()); }

// Deterministic Hermitian matrix with generically distinct eigenvalues and
// generic eigenvectors; used to split joint eigenbases.
Matrix probe_hermitian(int n) {
  Matrix g(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      g(a, b) = cplx(std::cos(1.3 * a + 0.7 * b + 0.1),
                     std::sin(0.9 * a - 1.1 * b + 0.2));
    }
  }
  Matrix y = g + g.adjoint();
  for (int a = 0; a < n; ++a) y(a, a) += 0.731 * (a + 1);
  return y;
}

Matrix apply_dual(const KrausRep& k, const Matrix& y) {
  Matrix out = Matrix::Zero(k.d_in, k.d_in);
  for (const auto& a : k.ops) out += a.adjoint() * y * a;
  return out;
}

// Index of the largest-magnitude entry (first among ties).
Eigen::Index argmax_abs(const Vector& v) {
  const double mx = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= (1.0 - 1e-9) * mx) return i;
  }
  return 0;
}

Matrix choi_of_superop_map(const Matrix& s, int d_in, int d_out) {
  return choi_from_superoperator(s, d_in, d_out).mat;
}

// True when tr Gamma(Y) <= tr Y for all PSD Y, read off the Choi matrix.
bool trace_non_increasing(const Matrix& choi, int d_in, int d_out,
                          const Tolerance& tol) {
  const Matrix dual_unit = partial_trace(choi, d_in, d_out, Side::Second);
  const Matrix slack = Matrix::Identity(d_in, d_in) - dual_unit.transpose();
  return is_hermitian(slack, tol) && min_eigenvalue(slack) >= -tol.eps_psd;
}

}  // namespace

Certificate is_ppt(const KrausRep& k, const Tolerance& tol) {
  Certificate cert = make_cert(Property::PPT, tol);
  cert.provenance = {"choi-psd", "partial-transpose-psd"};
  const Matrix c = choi_from_kraus(k).mat;
  const Matrix pt = partial_transpose(c, k.d_in, k.d_out);
  const double m1 = min_eigenvalue(c), m2 = min_eigenvalue(pt);
  cert.witness.scalars.push_back({"min_eig_choi", m1});
  cert.witness.scalars.push_back({"min_eig_partial_transpose", m2});
  const bool ok = is_psd(c, tol) && is_psd(pt, tol);
  cert.verdict = ok ? Verdict::True : Verdict::False;
  cert.note = ok ? "Choi matrix and its partial transpose are PSD"
                 : "partial transpose of the Choi matrix has a negative eigenvalue";
  return cert;
}

Certificate eb_certificate(const KrausRep& k, const Tolerance& tol) {
  Certificate cert = make_cert(Property::EB, tol);
  const Certificate ppt = is_ppt(k, tol);
  const int cr = choi_rank(k, tol);
  double er_lower = cr;
  double er_upper = std::pow(static_cast<double>(k.d_in) * k.d_out, 2);
  auto finish = [&](Verdict v, std::string prov, std::string note) {
    cert.verdict = v;
    cert.provenance.push_back(std::move(prov));
    cert.note = std::move(note);
    if (v != Verdict::False) {
      cert.witness.scalars.push_back({"er_lower", er_lower});
      cert.witness.scalars.push_back({"er_upper", er_upper});
    }
    return cert;
  };
  if (!ppt.is_true()) {
    cert.witness.scalars = ppt.witness.scalars;
    return finish(Verdict::False, "ppt-necessary",
                  "map is not PPT, and every EB map is PPT");
  }
  const auto terms = rank_one_terms(k, tol);
  if (!terms.empty()) {
    er_upper = std::min(er_upper, static_cast<double>(terms.size()));
    return finish(Verdict::True, "rank-one-kraus",
                  "given Kraus operators all have rank one");
  }
  const Matrix c = choi_from_kraus(k).mat;
  const bool projection = (c * c - c).norm() <= tol.eps_eq;
  const Matrix image_of_unit =
      qchan::apply(k, Matrix::Identity(k.d_in, k.d_in));
  if (projection && is_trace_preserving(k, tol) &&
      rank_tol(image_of_unit, tol) <= k.d_in) {
    er_lower = er_upper = k.d_in;
    return finish(Verdict::True, "choi-projection",
                  "PPT channel with projection Choi matrix");
  }
  if (k.d_in * k.d_out <= 6) {
    return finish(Verdict::True, "low-dimension-ppt (external)",
                  "PPT is equivalent to separability when d_in*d_out <= 6");
  }
  // Every state whose purity is at most 1/(D-1) is separable, D being the
  // total dimension (Gurvits-Barnum ball around the maximally mixed state).
  const double total = static_cast<double>(k.d_in) * k.d_out;
  const Matrix rho = c / c.trace().real();
  const double purity = rho.squaredNorm();
  cert.witness.scalars.push_back({"choi_state_purity", purity});
  if (purity <= 1.0 / (total - 1.0) + tol.eps_eq) {
    return finish(Verdict::True, "separable-ball (external)",
                  "normalised Choi matrix lies in the separable ball around the "
                  "maximally mixed state");
  }
  return finish(Verdict::Indeterminate, "none",
                "separability is not decided by the implemented criteria at "
                "this dimension");
}

Certificate eb_certificate(const HolevoForm& h, const Tolerance& tol) {
  validate(h, tol);
  Certificate cert = make_cert(Property::EB, tol);
  const KrausRep k = holevo_to_kraus(h, tol);
  cert.verdict = Verdict::True;
  cert.provenance = {"holevo-form"};
  cert.note = "map is given in measure-and-prepare form";
  cert.witness.scalars.push_back({"er_lower", static_cast<double>(choi_rank(k, tol))});
  cert.witness.scalars.push_back({"er_upper", static_cast<double>(k.ops.size())});
  return cert;
}

Certificate seb_certificate(const KrausRep& k, const Tolerance& tol) {
  Certificate cert = eb_certificate(k, tol);
  cert.property = Property::SEB;
  cert.provenance.push_back("finite-dimension: SEB equals EB");
  return cert;
}

GroupedHolevoForm group_holevo(const HolevoForm& h, const Tolerance& tol) {
  validate(h, tol);
  GroupedHolevoForm g{h.d_in, h.d_out, {}};
  std::vector<Matrix> unmerged;
  for (int j = 0; j < static_cast<int>(h.pairs.size()); ++j) {
    const Matrix& f = h.pairs[j].F;
    if (rank_tol(f, tol) != 1) {
      throw PreconditionError("effect " + std::to_string(j + 1) +
                              " does not have rank one");
    }
    auto ed = eig_hermitian(f, tol);
    const Vector uj = std::sqrt(std::max(0.0, ed.values(0))) * ed.vectors.col(0);
    bool placed = false;
    for (std::size_t k = 0; k < g.classes.size() && !placed; ++k) {
      const Vector& uk = g.classes[k].u;
      const cplx ip = uk.dot(uj);  // <u_k, u_j>
      if (std::abs(ip) >= (1.0 - tol.eps_eq) * uk.norm() * uj.norm()) {
        const double lam2 = std::norm(ip / uk.squaredNorm());
        unmerged[k] += lam2 * h.pairs[j].R;
        g.classes[k].members.push_back(j);
        placed = true;
      }
    }
    if (!placed) {
      g.classes.push_back(HolevoClass{uj, Matrix(), 0.0, {j}});
      unmerged.push_back(h.pairs[j].R);
    }
  }
  for (std::size_t k = 0; k < g.classes.size(); ++k) {
    const double w = unmerged[k].trace().real();
    g.classes[k].weight = w;
    g.classes[k].R = unmerged[k] / w;
  }
  return g;
}

HolevoForm to_holevo(const GroupedHolevoForm& g) {
  HolevoForm h{g.d_in, g.d_out, {}};
  for (const auto& c : g.classes) {
    h.pairs.push_back({c.weight * c.u * c.u.adjoint(), c.R});
  }
  return h;
}

namespace {

Matrix merged_isometry(const GroupedHolevoForm& g, const Tolerance& tol) {
  std::vector<Vector> cols;
  for (const auto& c : g.classes) {
    auto ed = eig_hermitian(c.R, tol);
    for (int b = 0; b < g.d_out; ++b) {
      if (ed.values(b) <= tol.eps_rank * ed.values(0)) break;
      cols.push_back(ed.vectors.col(b));
    }
  }
  Matrix w(g.d_out, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) w.col(i) = cols[i];
  return w;
}

double max_cross_product(const GroupedHolevoForm& g, int* bk, int* bl) {
  double worst = 0.0;
  *bk = *bl = -1;
  for (std::size_t k = 0; k < g.classes.size(); ++k) {
    for (std::size_t l = k + 1; l < g.classes.size(); ++l) {
      const double p = (g.classes[k].R * g.classes[l].R).norm();
      if (p > worst) {
        worst = p;
        *bk = static_cast<int>(k);
        *bl = static_cast<int>(l);
      }
    }
  }
  return worst;
}

}  // namespace

Certificate degradable_seb_test(const HolevoForm& h, const Tolerance& tol) {
  Certificate cert = make_cert(Property::Degradable, tol);
  cert.provenance = {"proportionality-grouping", "merged-state-orthogonality"};
  const GroupedHolevoForm g = group_holevo(h, tol);
  const int nc = static_cast<int>(g.classes.size());

  // Distance of the closest cross-class pair from the grouping threshold.
  double gap = 1.0;
  for (int k = 0; k < nc; ++k) {
    for (int l = k + 1; l < nc; ++l) {
      const Vector& a = g.classes[k].u;
      const Vector& b = g.classes[l].u;
      gap = std::min(gap, 1.0 - std::abs(a.dot(b)) / (a.norm() * b.norm()));
    }
  }
  cert.witness.scalars.push_back({"classes", static_cast<double>(nc)});
  cert.witness.scalars.push_back({"grouping_margin", gap});

  // First violating class pair in lexicographic order.
  int vk = -1, vl = -1;
  for (int k = 0; k < nc && vk < 0; ++k) {
    for (int l = k + 1; l < nc; ++l) {
      if ((g.classes[k].R * g.classes[l].R).norm() > tol.eps_eq) {
        vk = k;
        vl = l;
        break;
      }
    }
  }
  if (vk >= 0) {
    cert.verdict = Verdict::False;
    cert.note = "states of two linearly independent effects are not orthogonal";
    // Member pair with the largest overlap inside the violating classes.
    double best = -1.0;
    int bi = 0, bj = 0;
    for (int i : g.classes[vk].members) {
      for (int j : g.classes[vl].members) {
        const double p = (h.pairs[i].R * h.pairs[j].R).norm();
        if (p > best) {
          best = p;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi > bj) std::swap(bi, bj);
    const Matrix si = psd_sqrt(h.pairs[bi].R), sj = psd_sqrt(h.pairs[bj].R);
    const double ui = std::sqrt(h.pairs[bi].F.trace().real());
    const double uj = std::sqrt(h.pairs[bj].F.trace().real());
    cert.witness.index_pair = std::make_pair(bi + 1, bj + 1);
    cert.witness.scalars.push_back({"inner_product_abs", ui * uj * (si * sj).norm()});
    cert.witness.scalars.push_back(
        {"merged_product_norm", (g.classes[vk].R * g.classes[vl].R).norm()});
    return cert;
  }
  cert.verdict = Verdict::True;
  cert.note = "merged states of distinct classes have orthogonal supports";
  for (int k = 0; k < nc; ++k) {
    const std::string p = "class" + std::to_string(k + 1) + "_";
    cert.witness.matrices.push_back({p + "u", g.classes[k].u});
    cert.witness.matrices.push_back({p + "R", g.classes[k].R});
    cert.witness.scalars.push_back({p + "weight", g.classes[k].weight});
  }
  const Matrix w = merged_isometry(g, tol);
  cert.witness.matrices.push_back({"self_complement_isometry", w});
  return cert;
}

SelfComplementWitness self_complement_witness(const HolevoForm& h,
                                              const Tolerance& tol) {
  const GroupedHolevoForm g = group_holevo(h, tol);
  int k = 0, l = 0;
  if (max_cross_product(g, &k, &l) > tol.eps_eq) {
    throw PreconditionError("self_complement_witness: Holevo form fails the "
                            "degradability test");
  }
  SelfComplementWitness out;
  out.w = merged_isometry(g, tol);
  const KrausRep phi = holevo_to_kraus(h, tol);
  std::vector<Matrix> compressed;
  for (const auto& a : phi.ops) compressed.push_back(out.w.adjoint() * a);
  const KrausRep ad_w_phi =
      make_kraus(phi.d_in, static_cast<int>(out.w.cols()), compressed);
  const KrausRep back = compose(ad_operator(out.w), ad_w_phi);
  const double scale = rel_scale(choi_from_kraus(phi).mat);
  const double r1 = choi_distance(back, phi) / scale;
  const Certificate pair = is_complementary_pair(phi, ad_w_phi, tol);
  const double* r2 = pair.witness.scalar("residual");
  out.residual = std::max(r1, pair.is_true() && r2 ? *r2 : INFINITY);
  return out;
}

KrausRep seb_antidegrading_map(const KrausRep& k, const Tolerance& tol) {
  const auto terms = rank_one_terms(k, tol);
  if (terms.empty()) {
    throw PreconditionError("seb_antidegrading_map: operators are not rank one");
  }
  const int n = static_cast<int>(terms.size());
  std::vector<Matrix> ops;
  for (int j = 0; j < n; ++j) {
    ops.push_back(terms[j].v.normalized() * basis_vector(n, j).adjoint());
  }
  return make_kraus(n, k.d_out, std::move(ops));
}

KrausRep seb_antidegrading_map(const HolevoForm& h, const Tolerance& tol) {
  return seb_antidegrading_map(holevo_to_kraus(h, tol), tol);
}

Certificate degradability_via_inverse(const KrausRep& k, const Tolerance& tol) {
  Certificate cert = make_cert(Property::Degradable, tol);
  const KrausRep minimal = kraus_from_choi(choi_from_kraus(k), tol);
  const KrausRep comp = complement_from_kraus(minimal);
  const int din2 = k.d_in * k.d_in, dout2 = k.d_out * k.d_out;
  const Matrix s = superoperator(k);
  const Matrix sc = superoperator(comp);
  const int rank = rank_tol(s, tol);

  auto judge = [&](const Matrix& gamma, bool unique) {
    const Matrix choi = choi_of_superop_map(gamma, k.d_out, comp.d_out);
    const double fit = (gamma * s - sc).norm() / rel_scale(sc);
    cert.witness.scalars.push_back({"composition_residual", fit});
    const bool cp = is_psd(choi, tol);
    const bool tni = trace_non_increasing(choi, k.d_out, comp.d_out, tol);
    if (cp && tni && fit <= tol.eps_eq) {
      cert.verdict = Verdict::True;
      cert.note = "linear degrading candidate is CP and trace non-increasing";
      cert.witness.maps.push_back(
          {"degrading_map",
           kraus_from_choi(ChoiMatrix{k.d_out, comp.d_out, choi}, tol)});
    } else if (unique) {
      cert.verdict = Verdict::False;
      cert.note = !cp ? "the unique degrading candidate is not completely positive"
                      : "the unique degrading candidate increases trace";
      cert.witness.scalars.push_back({"min_eig_candidate_choi", min_eigenvalue(choi)});
    } else {
      cert.verdict = Verdict::Indeterminate;
      cert.note = "pseudo-inverse candidate is not a channel; extensions off "
                  "the range were not searched";
    }
  };

  if (rank == din2 && rank == dout2) {
    cert.provenance = {"unique-inverse"};
    judge(sc * s.inverse(), true);
    return cert;
  }
  const auto terms = rank_one_terms(k, tol);
  if (!terms.empty()) {
    Certificate seb = degradable_seb_test(holevo_from_rank_one(k, tol), tol);
    seb.provenance.insert(seb.provenance.begin(), "rank-one-holevo-route");
    if (seb.is_true()) {
      // Ad_W o Phi is a complement of Phi, so Ad_W itself degrades Phi.
      const Matrix* w = seb.witness.matrix("self_complement_isometry");
      seb.witness.maps.push_back({"degrading_map", ad_operator(w->adjoint())});
    }
    return seb;
  }
  const Matrix sp = pinv(s, tol.eps_rank);
  const Matrix kernel_part =
      sc * (Matrix::Identity(din2, din2) - sp * s);
  const double leak = kernel_part.norm() / rel_scale(sc);
  cert.witness.scalars.push_back({"kernel_leak", leak});
  if (leak > std::sqrt(tol.eps_eq)) {
    cert.provenance = {"kernel-obstruction"};
    cert.verdict = Verdict::False;
    cert.note = "some input is annihilated by the map but not by its complement";
    return cert;
  }
  if (leak > tol.eps_eq) {
    cert.provenance = {"kernel-obstruction"};
    cert.verdict = Verdict::Indeterminate;
    cert.note = "kernel inclusion holds only up to numerical noise";
    return cert;
  }
  cert.provenance = {"pseudo-inverse"};
  judge(sc * sp, false);
  return cert;
}

Certificate antidegradable_test(const KrausRep& k, const Tolerance& tol) {
  if (!rank_one_terms(k, tol).empty()) {
    Certificate cert = make_cert(Property::AntiDegradable, tol);
    cert.provenance = {"seb-antidegrading-map"};
    const KrausRep gamma = seb_antidegrading_map(k, tol);
    const KrausRep comp = complement_from_kraus(k);
    const double res =
        choi_distance(compose(gamma, comp), k) / rel_scale(choi_from_kraus(k).mat);
    cert.witness.scalars.push_back({"residual", res});
    cert.witness.maps.push_back({"antidegrading_map", gamma});
    cert.verdict = res <= 10 * tol.eps_eq ? Verdict::True : Verdict::Indeterminate;
    cert.note = cert.is_true() ? "rank-one Kraus operators give a map from the "
                                 "complement back to the channel"
                               : "anti-degrading construction left a residual";
    return cert;
  }
  const Certificate eb = eb_certificate(k, tol);
  if (eb.is_true()) {
    Certificate cert = make_cert(Property::AntiDegradable, tol);
    cert.provenance = {"entanglement-breaking"};
    for (const auto& p : eb.provenance) cert.provenance.push_back("eb:" + p);
    cert.verdict = Verdict::True;
    cert.note = "entanglement breaking maps are anti-degradable";
    return cert;
  }
  Certificate cert = degradability_via_inverse(minimal_complement(k, tol), tol);
  cert.property = Property::AntiDegradable;
  cert.provenance.insert(cert.provenance.begin(), "complement-route");
  for (auto& m : cert.witness.maps) {
    // A degrading map of the complement sends it to a complement of the
    // complement, i.e. back to the channel up to an isometry.
    if (m.first == "degrading_map") m.first = "antidegrading_map";
  }
  return cert;
}

Certificate antidegradable_test(const HolevoForm& h, const Tolerance& tol) {
  return antidegradable_test(holevo_to_kraus(h, tol), tol);
}

namespace {

struct CanonicalForm {
  Matrix u;  // columns u_i (input space)
  Matrix v;  // columns v_i (output space)
  double residual = INFINITY;
};

// Fits X -> sum_i <u_i, X u_i> |v_i><v_i| with orthonormal v_i.
CanonicalForm extract_orthonormal_outputs(const KrausRep& k,
                                          const Tolerance& tol) {
  CanonicalForm out;
  const Matrix h = qchan::apply(k, probe_hermitian(k.d_in));
  const Matrix v = eig_hermitian(h, tol).vectors;
  out.v = v;
  out.u = Matrix::Zero(k.d_in, k.d_out);
  std::vector<Matrix> ops;
  for (int i = 0; i < k.d_out; ++i) {
    const Matrix f = apply_dual(k, v.col(i) * v.col(i).adjoint());
    const auto ed = eig_hermitian(f, tol);
    out.u.col(i) = std::sqrt(std::max(0.0, ed.values(0))) * ed.vectors.col(0);
    ops.push_back(v.col(i) * out.u.col(i).adjoint());
  }
  const KrausRep fit{k.d_in, k.d_out, ops};
  out.residual = choi_distance(fit, k) / rel_scale(choi_from_kraus(k).mat);
  return out;
}

// Fits X -> sum_j <u_j, X u_j> |v_j><v_j| with orthonormal u_j.
CanonicalForm extract_orthonormal_inputs(const KrausRep& k,
                                         const Tolerance& tol) {
  CanonicalForm out;
  const Matrix h = apply_dual(k, probe_hermitian(k.d_out));
  Matrix u = eig_hermitian(h, tol).vectors;
  std::vector<int> order(k.d_in);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return argmax_abs(u.col(a)) < argmax_abs(u.col(b));
  });
  out.u = Matrix(k.d_in, k.d_in);
  for (int j = 0; j < k.d_in; ++j) out.u.col(j) = u.col(order[j]);
  out.v = Matrix::Zero(k.d_out, k.d_in);
  std::vector<Matrix> ops;
  bool pure = true;
  for (int j = 0; j < k.d_in; ++j) {
    const Matrix p = qchan::apply(k, out.u.col(j) * out.u.col(j).adjoint());
    if (rank_tol(p, tol) > 1) pure = false;
    const auto ed = eig_hermitian(p, tol);
    out.v.col(j) = ed.vectors.col(0);
    ops.push_back(std::sqrt(std::max(0.0, ed.values(0))) * out.v.col(j) *
                  out.u.col(j).adjoint());
  }
  const KrausRep fit{k.d_in, k.d_out, ops};
  out.residual = choi_distance(fit, k) / rel_scale(choi_from_kraus(k).mat);
  if (!pure) out.residual = std::max(out.residual, 1.0);
  return out;
}

}  // namespace

Certificate cstar_extreme_test(const KrausRep& k, const Tolerance& tol) {
  Certificate cert = make_cert(Property::CStarExtreme, tol);
  cert.provenance = {"unital-eb-choi-rank"};
  if (!is_unital(k, tol)) {
    cert.verdict = Verdict::False;
    cert.note = "map is not unital, so it is not a unital EB map";
    return cert;
  }
  Certificate eb = eb_certificate(k, tol);
  if (eb.verdict == Verdict::Indeterminate) {
    const Certificate eb_dual = eb_certificate(dual(k), tol);
    if (eb_dual.verdict != Verdict::Indeterminate) {
      eb = eb_dual;
      eb.provenance.insert(eb.provenance.begin(), "dual-eb");
    }
  }
  for (const auto& p : eb.provenance) cert.provenance.push_back("eb:" + p);
  if (eb.is_false()) {
    cert.verdict = Verdict::False;
    cert.note = "map is not entanglement breaking";
    return cert;
  }
  const int cr = choi_rank(k, tol);
  cert.witness.scalars.push_back({"choi_rank", static_cast<double>(cr)});
  if (cr != k.d_out) {
    cert.verdict = Verdict::False;
    cert.note = "Choi rank " + std::to_string(cr) + " differs from output dimension " +
                std::to_string(k.d_out);
    return cert;
  }
  if (eb.verdict == Verdict::Indeterminate) {
    cert.verdict = Verdict::Indeterminate;
    cert.note = "entanglement breaking property not decided";
    return cert;
  }
  const CanonicalForm cf = extract_orthonormal_outputs(k, tol);
  cert.witness.scalars.push_back({"canonical_form_residual", cf.residual});
  if (cf.residual > tol.eps_eq) {
    cert.verdict = Verdict::Indeterminate;
    cert.note = "canonical rank-one form could not be reconstructed";
    return cert;
  }
  cert.verdict = Verdict::True;
  cert.note = "unital EB map with Choi rank equal to the output dimension";
  cert.witness.matrices.push_back({"u", cf.u});
  cert.witness.matrices.push_back({"v", cf.v});
  return cert;
}

std::string choi_projection_precondition(const KrausRep& k,
                                         const Tolerance& tol) {
  if (!is_trace_preserving(k, tol)) return "map is not trace preserving";
  if (!is_ppt(k, tol).is_true()) return "map is not PPT";
  const Matrix img = qchan::apply(k, Matrix::Identity(k.d_in, k.d_in));
  if (rank_tol(img, tol) > k.d_in) return "rank of the image of I exceeds d_in";
  return {};
}

ChoiProjectionBundle choi_projection_equivalences(const KrausRep& k,
                                                  const Tolerance& tol) {
  const std::string why = choi_projection_precondition(k, tol);
  if (!why.empty()) throw PreconditionError("choi_projection_equivalences: " + why);
  ChoiProjectionBundle out;
  const Matrix c = choi_from_kraus(k).mat;

  Certificate proj = make_cert(Property::ChoiProjection, tol);
  proj.label = "projection";
  proj.provenance = {"idempotent-choi"};
  const double pres = (c * c - c).norm();
  proj.witness.scalars.push_back({"idempotence_residual", pres});
  proj.verdict = pres <= tol.eps_eq ? Verdict::True : Verdict::False;
  proj.note = proj.is_true() ? "C^2 = C" : "Choi matrix is not a projection";
  out.conditions.push_back(proj);

  Certificate eb = eb_certificate(k, tol);
  const int cr = choi_rank(k, tol);
  Certificate ebr = make_cert(Property::EB, tol);
  ebr.label = "er=d_in";
  ebr.provenance = eb.provenance;
  ebr.provenance.push_back("choi-rank");
  ebr.witness.scalars.push_back({"choi_rank", static_cast<double>(cr)});
  if (eb.is_true() && cr == k.d_in) {
    ebr.verdict = Verdict::True;
    ebr.note = "EB with Choi rank d_in";
  } else if (eb.is_false() || cr != k.d_in) {
    ebr.verdict = Verdict::False;
    ebr.note = eb.is_false() ? "not EB" : "Choi rank differs from d_in";
  } else {
    ebr.verdict = Verdict::Indeterminate;
    ebr.note = eb.note;
  }
  out.conditions.push_back(ebr);

  Certificate cs = cstar_extreme_test(dual(k), tol);
  cs.label = "dual";
  out.conditions.push_back(cs);

  const CanonicalForm cf = extract_orthonormal_inputs(k, tol);
  Certificate form = make_cert(Property::EB, tol);
  form.label = "unit-vector-form";
  form.provenance = {"orthonormal-input-extraction"};
  form.witness.scalars.push_back({"form_residual", cf.residual});
  bool unit = true;
  for (int j = 0; j < k.d_in; ++j) {
    if (std::abs(cf.v.col(j).norm() - 1.0) > tol.eps_eq) unit = false;
  }
  form.verdict = (cf.residual <= tol.eps_eq && unit) ? Verdict::True : Verdict::False;
  form.note = form.is_true()
                  ? "map measures in an orthonormal basis and prepares pure states"
                  : "no orthonormal-measurement, pure-preparation form";
  if (form.is_true()) {
    form.witness.matrices.push_back({"u", cf.u});
    form.witness.matrices.push_back({"v", cf.v});
  }
  out.conditions.push_back(form);

  Certificate fact = make_cert(Property::ChoiProjection, tol);
  fact.label = "schur-factorization";
  fact.provenance = {"schur-complement-factorization"};
  if (form.is_true()) {
    const Matrix& b = cf.v;                   // columns v_j, B^*B = A^T
    const Matrix a = (b.adjoint() * b).transpose();
    const KrausRep s = schur_complement_from_factor(b);
    const KrausRep ad_u = ad_operator(cf.u.adjoint());
    const double r1 = choi_distance(compose(s, ad_u), k) / rel_scale(c);
    // Same identity in block form: C = (U^T (x) I)^* C_S (U^T (x) I).
    const Matrix lift = kron(cf.u.transpose(), Matrix::Identity(k.d_out, k.d_out));
    const double r2 =
        (lift.adjoint() * choi_from_kraus(s).mat * lift - c).norm() / rel_scale(c);
    double diag_dev = (a.diagonal() - Vector::Ones(k.d_in)).norm();
    out.factorization_residual = std::max(r1, r2);
    out.a = a;
    out.b = b;
    out.u = cf.u;
    fact.witness.scalars.push_back({"factorization_residual", out.factorization_residual});
    fact.witness.scalars.push_back({"unit_diagonal_defect", diag_dev});
    fact.witness.matrices.push_back({"A", a});
    fact.witness.matrices.push_back({"U", cf.u});
    fact.verdict = (out.factorization_residual <= tol.eps_eq && diag_dev <= tol.eps_eq)
                       ? Verdict::True
                       : Verdict::False;
  } else {
    fact.verdict = Verdict::False;
  }
  fact.note = fact.is_true() ? "map factors through a unit-diagonal Schur complement"
                             : "no Schur-complement factorisation found";
  out.conditions.push_back(fact);

  for (const auto& cond : out.conditions) {
    if (cond.verdict != out.conditions[0].verdict) out.consistent = false;
  }
  return out;
}

SchurCharacterization schur_characterization(const Matrix& a,
                                             const Tolerance& tol) {
  const Matrix b = schur_gram_factor(a, tol);
  const int d = static_cast<int>(a.rows());
  SchurCharacterization out;
  out.z = b.conjugate();

  out.seb = make_cert(Property::SEB, tol);
  out.seb.provenance = {"schur-diagonality"};
  Matrix off = a;
  off.diagonal().setZero();
  const double mass = off.norm();
  out.seb.witness.scalars.push_back({"off_diagonal_mass", mass});
  out.seb.verdict = mass <= tol.eps_eq ? Verdict::True : Verdict::False;
  out.seb.note = out.seb.is_true() ? "symbol is diagonal" : "symbol has off-diagonal mass";

  out.complement_seb = make_cert(Property::SEB, tol);
  out.complement_seb.label = "complement";
  out.complement_seb.provenance = {"rank-one-complement"};
  out.complement_seb.verdict = Verdict::True;
  out.complement_seb.note = "complement measures in the standard basis";
  out.complement_seb.witness.matrices.push_back({"z", out.z});
  out.complement_seb.witness.matrices.push_back({"z_gram", out.z.adjoint() * out.z});
  (void)d;

  out.complement_degradable = degradable_seb_test(schur_complement_holevo(a, tol), tol);
  out.complement_degradable.label = "complement";
  return out;
}

}  // namespace qchan
