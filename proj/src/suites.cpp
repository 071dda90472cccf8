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

#include "qchan/suites.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "qchan/complement.hpp"
#include "qchan/errors.hpp"
#include "qchan/random.hpp"
#include "qchan/report.hpp"
#include "qchan/structure.hpp"
#include "qchan/zoo.hpp"

namespace qchan {

namespace {

Vector unit_vector(Rng& rng, int d) {
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

double rel_choi_distance(const KrausRep& a, const KrausRep& b) {
  return choi_distance(a, b) / std::max(1.0, choi_from_kraus(b).mat.norm());
}

std::string verdicts(std::initializer_list<std::pair<const char*, Verdict>> vs) {
  std::string out;
  for (const auto& [k, v] : vs) {
    if (!out.empty()) out += " ";
    out += fmt::format("{}={}", k, to_string(v));
  }
  return out;
}

void track_max(SuiteResult& r, const std::string& name, double v) {
  for (auto& [k, x] : r.stats) {
    if (k == name) {
      x = std::max(x, v);
      return;
    }
  }
  r.stats.push_back({name, v});
}

void count(SuiteResult& r, const std::string& name) {
  for (auto& [k, x] : r.stats) {
    if (k == name) {
      x += 1;
      return;
    }
  }
  r.stats.push_back({name, 1});
}

void record(SuiteResult& r, bool ok, const std::string& what) {
  r.instances += 1;
  if (ok) {
    r.passed += 1;
  } else {
    r.failures.push_back(what);
  }
}

// Degradable SEB channels against violators: degradability, PPT of the
// complement, orthogonality of merged states and self-complementarity must
// all agree with the construction.
void suite_thm32(SuiteResult& res, int n, std::uint64_t seed, const Tolerance& tol) {
  for (int i = 0; i < n; ++i) {
    const std::uint64_t s = mix_seed(seed, i);
    Rng rng(s);
    const int di = rng.uniform_int(2, 5), dout = rng.uniform_int(2, 5);
    const int cl = rng.uniform_int(2, dout);
    for (int viol = 0; viol < 2; ++viol) {
      const HolevoForm h = viol ? random_seb_violator(di, dout, cl, s)
                                : random_degradable_seb(di, dout, cl, s);
      const KrausRep k = holevo_to_kraus(h, tol);
      Certificate deg = degradability_via_inverse(k, tol);
      if (deg.is_true()) {
        // The degrading map must actually produce a complement.
        const KrausRep* g = deg.witness.map("degrading_map");
        if (!g || !is_complementary_pair(k, compose(*g, k), tol).is_true()) {
          deg.verdict = Verdict::Indeterminate;
        }
      }
      const Certificate ppt = is_ppt(minimal_complement(k, tol), tol);
      const Certificate orth = degradable_seb_test(h, tol);
      const Certificate self = is_self_complementary(k, tol);
      const Verdict want = viol ? Verdict::False : Verdict::True;
      const bool ok = deg.verdict == want && ppt.verdict == want &&
                      orth.verdict == want && self.verdict == want;
      if (self.is_true()) {
        track_max(res, "max_self_complement_residual", *self.witness.scalar("residual"));
      }
      record(res, ok,
             fmt::format("instance {} ({}, d_in={} d_out={} classes={}): {}", i,
                         viol ? "violator" : "degradable", di, dout, cl,
                         verdicts({{"degradable", deg.verdict},
                                   {"complement_ppt", ppt.verdict},
                                   {"orthogonal_states", orth.verdict},
                                   {"self_complementary", self.verdict}})));
    }
  }
}

// Schur multipliers: SEB iff the symbol is diagonal, and the complement is
// degradable under the same condition.
void suite_thm34(SuiteResult& res, int n, std::uint64_t seed, const Tolerance& tol) {
  for (int i = 0; i < n; ++i) {
    Rng rng(mix_seed(seed, i));
    const int d = rng.uniform_int(2, 5);
    Matrix a = Matrix::Zero(d, d);
    switch (i % 4) {
      case 0:
      case 2:
        for (int j = 0; j < d; ++j) a(j, j) = 0.2 + 1.3 * rng.uniform();
        break;
      case 1: {
        const Matrix g = rng.ginibre(d, d);
        a = g * g.adjoint();
        a /= a.norm();
        break;
      }
      default: {
        for (int j = 0; j < d; ++j) a(j, j) = 1.0;
        const cplx c = 0.5 * rng.uniform() * rng.complex_normal() / std::sqrt(2.0) + 0.05;
        a(0, 1) = c;
        a(1, 0) = std::conj(c);
        break;
      }
    }
    Matrix off = a;
    off.diagonal().setZero();
    const bool diagonal = off.norm() <= 1e-9;
    const SchurCharacterization sc = schur_characterization(a, tol);
    const double gram = (sc.z.adjoint() * sc.z - a).norm();
    track_max(res, "max_gram_residual", gram);
    const Verdict want = diagonal ? Verdict::True : Verdict::False;
    const bool ok = sc.seb.verdict == want && sc.complement_degradable.verdict == want &&
                    sc.complement_seb.is_true() && gram <= 1e-8;
    record(res, ok,
           fmt::format("instance {} (d={}, diagonal={}): {} gram_residual={}", i, d,
                       diagonal, verdicts({{"seb", sc.seb.verdict},
                                           {"complement_degradable", sc.complement_degradable.verdict}}),
                       format_number(gram)));
  }
}

KrausRep random_extreme_ueb(Rng& rng, int d1, int d2, const Tolerance& tol) {
  std::vector<Vector> us, vs;
  const Matrix v = rng.haar_isometry(d2, d2);
  for (int i = 0; i < d2; ++i) {
    us.push_back(unit_vector(rng, d1));
    vs.push_back(v.col(i));
  }
  return cstar_extreme_gen(us, vs, tol);
}

// Unital EB maps: degradable exactly when C*-extreme.
void suite_thm42(SuiteResult& res, int n, std::uint64_t seed, const Tolerance& tol) {
  for (int i = 0; i < n; ++i) {
    Rng rng(mix_seed(seed, i));
    const int d1 = rng.uniform_int(2, 4), d2 = rng.uniform_int(2, 4);
    KrausRep k = random_extreme_ueb(rng, d1, d2, tol);
    const bool mixture = i % 2 == 1;
    if (mixture) {
      const KrausRep other = random_extreme_ueb(rng, d1, d2, tol);
      const double t = 0.3 + 0.4 * rng.uniform();
      std::vector<Matrix> ops;
      for (const auto& a : k.ops) ops.push_back(std::sqrt(t) * a);
      for (const auto& a : other.ops) ops.push_back(std::sqrt(1.0 - t) * a);
      k = make_kraus(d1, d2, std::move(ops));
    }
    const Certificate cs = cstar_extreme_test(k, tol);
    const Certificate deg = degradability_via_inverse(k, tol);
    bool ok = is_unital(k, tol) && cs.verdict == deg.verdict &&
              cs.verdict != Verdict::Indeterminate;
    if (!mixture) ok = ok && cs.is_true();
    if (cs.is_false()) count(res, "non_extreme_instances");
    record(res, ok,
           fmt::format("instance {} ({}, d1={} d2={}): {}", i,
                       mixture ? "mixture" : "extreme", d1, d2,
                       verdicts({{"cstar_extreme", cs.verdict}, {"degradable", deg.verdict}})));
  }
}

// Projection-Choi channels: all characterisations agree, and the recovered
// factorisation reproduces the channel; Werner-Holevo and Phi_lambda
// families fail them.
void suite_thm45(SuiteResult& res, int n, std::uint64_t seed, const Tolerance& tol) {
  const std::vector<double> wh_grid = {-1.0, -0.5, 0.0, 0.25, 0.5};  // scaled by 1/d for > 0
  const std::vector<double> pl_grid = {-1.0 / 3.0, -0.2, 0.0, 0.25, 0.5, 1.0};
  for (int i = 0; i < n; ++i) {
    Rng rng(mix_seed(seed, i));
    if (i % 2 == 0) {
      const int d = rng.uniform_int(2, 3);
      Matrix g = rng.ginibre(d, d);
      for (int j = 0; j < d; ++j) g.col(j).normalize();
      const Matrix a = g.adjoint() * g;
      const KrausRep k = schur_complement_map(a, tol);
      const ChoiProjectionBundle b = choi_projection_equivalences(k, tol);
      bool all_true = b.consistent;
      for (const auto& c : b.conditions) all_true = all_true && c.is_true();
      // Independent reconstruction X -> sum_j <u_j, X u_j> |v_j><v_j|.
      double recon = INFINITY;
      if (all_true) {
        std::vector<Matrix> ops;
        for (int j = 0; j < d; ++j) ops.push_back(b.b.col(j) * b.u.col(j).adjoint());
        recon = rel_choi_distance(KrausRep{d, k.d_out, ops}, k);
      }
      track_max(res, "max_factorization_residual", recon);
      record(res, all_true && recon <= 1e-8,
             fmt::format("instance {} (schur complement, d={}): consistent={} residual={}", i,
                         d, b.consistent, format_number(recon)));
      continue;
    }
    KrausRep k;
    std::string label;
    if ((i / 2) % 2 == 0) {
      const int d = rng.uniform_int(2, 3);
      double lambda = wh_grid[(i / 4) % wh_grid.size()];
      if (lambda > 0) lambda = lambda * 2.0 / d;
      k = werner_holevo(d, lambda, WernerRange::EntanglementBreaking, tol);
      label = fmt::format("werner-holevo d={} lambda={}", d, format_number(lambda));
    } else {
      const double lambda = pl_grid[(i / 4) % pl_grid.size()];
      k = phi_lambda(2, lambda, tol);
      label = fmt::format("phi-lambda d=2 lambda={}", format_number(lambda));
    }
    Verdict proj;
    bool consistent = true;
    if (choi_projection_precondition(k, tol).empty()) {
      const ChoiProjectionBundle b = choi_projection_equivalences(k, tol);
      proj = b.conditions.front().verdict;
      consistent = b.consistent;
    } else {
      const Matrix c = choi_from_kraus(k).mat;
      proj = (c * c - c).norm() <= tol.eps_eq ? Verdict::True : Verdict::False;
    }
    const Certificate deg = degradability_via_inverse(k, tol);
    record(res, consistent && proj == Verdict::False && deg.is_false(),
           fmt::format("instance {} ({}): consistent={} {}", i, label, consistent,
                       verdicts({{"choi_projection", proj}, {"degradable", deg.verdict}})));
  }
}

// Direct sums of pure maps: the block-trace map degrades the sum.
void suite_prop48(SuiteResult& res, int n, std::uint64_t seed, const Tolerance& tol) {
  for (int i = 0; i < n; ++i) {
    Rng rng(mix_seed(seed, i));
    const int d = rng.uniform_int(2, 4), blocks = rng.uniform_int(2, 3);
    std::vector<Matrix> vs;
    for (int b = 0; b < blocks; ++b) vs.push_back(rng.ginibre(d, rng.uniform_int(1, 3)));
    const DirectSum ds = direct_sum_pure(vs);
    const KrausRep comp = complement_from_kraus(ds.channel);
    double worst = 0.0, scale = 1.0;
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        const Matrix e = unit_matrix(d, a, b);
        const Matrix want = qchan::apply(comp, e);
        scale = std::max(scale, want.norm());
        worst = std::max(worst, (qchan::apply(ds.degrading, qchan::apply(ds.channel, e)) - want).norm());
      }
    }
    const double rel = worst / scale;
    track_max(res, "max_degrading_residual", rel);
    const Certificate deg = degradability_via_inverse(ds.channel, tol);
    record(res, rel <= 1e-8 && !deg.is_false(),
           fmt::format("instance {} (d={}, blocks={}): residual={} degradable={}", i, d,
                       blocks, format_number(rel), to_string(deg.verdict)));
  }
}

// Dilation facts: complements of complements, connecting isometries between
// dilations, and the explicit complement formula.
void suite_appA(SuiteResult& res, int n, std::uint64_t seed, const Tolerance& tol) {
  for (int i = 0; i < n; ++i) {
    Rng rng(mix_seed(seed, i));
    const int di = rng.uniform_int(1, 4), dout = rng.uniform_int(2, 4);
    const int cr = rng.uniform_int(std::max(1, (di + dout - 1) / dout), di * dout);
    const KrausRep k = random_channel(di, dout, cr, mix_seed(seed, i) ^ 0x9e3779b97f4a7c15ULL);
    const KrausRep kc = complement_from_kraus(k);
    const KrausRep kcc = complement_from_kraus(kc);
    const bool back = is_complementary_pair(kc, k, tol).is_true() &&
                      is_complementary_pair(kc, kcc, tol).is_true();

    // A second Kraus family A'_i = sum_j U_ij A_j with U an isometry.
    const int m = static_cast<int>(k.ops.size()) + rng.uniform_int(0, 2);
    const Matrix u = rng.haar_isometry(m, static_cast<int>(k.ops.size()));
    std::vector<Matrix> ops;
    for (int r = 0; r < m; ++r) {
      Matrix a = Matrix::Zero(dout, di);
      for (std::size_t j = 0; j < k.ops.size(); ++j) a += u(r, j) * k.ops[j];
      ops.push_back(a);
    }
    const StinespringRep s1 = stinespring_from_kraus(k);
    const StinespringRep s2{di, dout, m, [&] {
                              Matrix a(dout * m, di);
                              for (int r = 0; r < dout; ++r)
                                for (int j = 0; j < m; ++j) a.row(r * m + j) = ops[j].row(r);
                              return a;
                            }()};
    const IsometryResult iso = connecting_isometry(s1, s2, tol);
    double dil = INFINITY;
    if (iso.status == Relation::Related) {
      const Matrix lift = kron(Matrix::Identity(dout, dout), iso.v);
      dil = (lift * s1.a - s2.a).norm() / std::max(1.0, s2.a.norm());
    }
    track_max(res, "max_connecting_residual", dil);

    // Complement formula T -> sum_ij tr(A_i T A_j^*) E_ij.
    double formula = 0.0;
    const int r = static_cast<int>(k.ops.size());
    for (int a = 0; a < di; ++a) {
      for (int b = 0; b < di; ++b) {
        const Matrix t = unit_matrix(di, a, b);
        Matrix want(r, r);
        for (int p = 0; p < r; ++p)
          for (int q = 0; q < r; ++q) want(p, q) = (k.ops[p] * t * k.ops[q].adjoint()).trace();
        formula = std::max(formula, (qchan::apply(kc, t) - want).norm());
      }
    }
    track_max(res, "max_formula_residual", formula);
    record(res, back && dil <= 1e-8 && formula <= 1e-10,
           fmt::format("instance {} (d_in={} d_out={} cr={}): double_complement={} "
                       "connecting_residual={} formula_residual={}",
                       i, di, dout, cr, back, format_number(dil), format_number(formula)));
  }
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"thm32", "thm34", "thm42",
                                                 "thm45", "prop48", "appA"};
  return names;
}

SuiteResult run_suite(const std::string& suite, int n, std::uint64_t seed,
                      const Tolerance& tol) {
  tol.validate();
  if (n < 1) throw ParameterError("instance count must be positive");
  SuiteResult res;
  res.suite = suite;
  res.seed = seed;
  res.tolerances = tol;
  if (suite == "thm32") {
    suite_thm32(res, n, seed, tol);
  } else if (suite == "thm34") {
    suite_thm34(res, n, seed, tol);
  } else if (suite == "thm42") {
    suite_thm42(res, n, seed, tol);
  } else if (suite == "thm45") {
    suite_thm45(res, n, seed, tol);
  } else if (suite == "prop48") {
    suite_prop48(res, n, seed, tol);
  } else if (suite == "appA") {
    suite_appA(res, n, seed, tol);
  } else {
    throw ParameterError("unknown suite \"" + suite + "\"");
  }
  return res;
}

std::string render_suite_text(const SuiteResult& r) {
  std::string out = fmt::format("qchan verify {}\nseed: {}\ntolerances: eq={} psd={} rank={}\n",
                                r.suite, r.seed, r.tolerances.eps_eq, r.tolerances.eps_psd,
                                r.tolerances.eps_rank);
  out += fmt::format("result: {}/{} passed\n", r.passed, r.instances);
  for (const auto& [k, v] : r.stats) out += fmt::format("{} = {}\n", k, format_number(v));
  for (const auto& f : r.failures) out += "FAIL " + f + "\n";
  return out;
}

json suite_to_json(const SuiteResult& r) {
  json stats = json::array();
  for (const auto& [k, v] : r.stats) stats.push_back({k, v});
  return {{"tool", "qchan"},
          {"suite", r.suite},
          {"seed", r.seed},
          {"tolerances",
           {{"eps_eq", r.tolerances.eps_eq},
            {"eps_psd", r.tolerances.eps_psd},
            {"eps_rank", r.tolerances.eps_rank}}},
          {"instances", r.instances},
          {"passed", r.passed},
          {"failures", r.failures},
          {"stats", stats}};
}

}  // namespace qchan
