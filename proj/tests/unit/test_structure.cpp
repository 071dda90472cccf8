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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "qchan/complement.hpp"
#include "qchan/errors.hpp"
#include "qchan/structure.hpp"
#include "qchan/zoo.hpp"
#include "support.hpp"

using namespace qchan;
using qtest::ket;
using qtest::unit;

namespace {

KrausRep identity_channel(int d) { return make_kraus(d, d, {Matrix::Identity(d, d)}); }

// T -> tr(T) rho.
KrausRep replacer(const Matrix& rho, int d_in) {
  HolevoForm h{d_in, static_cast<int>(rho.rows()), {{Matrix::Identity(d_in, d_in), rho}}};
  return holevo_to_kraus(h);
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

Matrix qubit_schur(cplx c) {
  Matrix a(2, 2);
  a << 1, c, std::conj(c), 1;
  return a;
}

HolevoForm random_rank_one_holevo(Rng& rng, int di, int dout, int n) {
  HolevoForm h{di, dout, {}};
  for (int j = 0; j < n; ++j) {
    Vector u = rng.ginibre(di, 1), v = rng.ginibre(dout, 1);
    v.normalize();
    h.pairs.push_back({u * u.adjoint(), v * v.adjoint()});
  }
  return h;
}

HolevoForm random_holevo(Rng& rng, int di, int dout, int n) {
  HolevoForm h{di, dout, {}};
  for (int j = 0; j < n; ++j) {
    Matrix r = qtest::random_psd(rng, dout, rng.uniform_int(1, dout));
    h.pairs.push_back({qtest::random_psd(rng, di, rng.uniform_int(1, di)), r / r.trace().real()});
  }
  return h;
}

// Degrading-map oracle: Gamma o Phi must equal the complement up to an
// isometry on the environment.
bool degrades(const KrausRep& gamma, const KrausRep& phi) {
  return is_complementary_pair(phi, compose(gamma, phi)).is_true();
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("is_ppt examples") {
  Rng rng(60);
  Matrix rho = qtest::random_psd(rng, 3, 3);
  auto c = is_ppt(replacer(rho / rho.trace().real(), 2));
  CHECK(c.is_true());
  CHECK(c.property == Property::PPT);

  c = is_ppt(identity_channel(2));
  CHECK(c.is_false());
  CHECK(*c.witness.scalar("min_eig_partial_transpose") == doctest::Approx(-1.0));

  CHECK(is_ppt(schur_map(qubit_schur(0.5))).is_false());
  CHECK(is_ppt(schur_map(qubit_schur(cplx(0, 0.01)))).is_false());
  CHECK(is_ppt(schur_map(qubit_schur(0.0))).is_true());
}

TEST_CASE("eb_certificate examples") {
  Rng rng(61);
  auto h = random_holevo(rng, 3, 3, 3);
  auto c = eb_certificate(h);
  CHECK(c.is_true());
  CHECK(has(c.provenance, "holevo-form"));

  c = eb_certificate(identity_channel(2));
  CHECK(c.is_false());
  CHECK(has(c.provenance, "ppt-necessary"));

  c = eb_certificate(werner_holevo(2, 0.5));
  CHECK(c.is_true());
  CHECK(has(c.provenance, "low-dimension-ppt (external)"));

  c = eb_certificate(holevo_to_kraus(qtest::shared_state_holevo()));
  CHECK(c.is_true());
  CHECK(has(c.provenance, "rank-one-kraus"));

  auto s = seb_certificate(werner_holevo(2, 0.5));
  CHECK(s.property == Property::SEB);
  CHECK(s.is_true());
}

TEST_CASE("eb_certificate separable ball") {
  // Werner-Holevo d = 3 at lambda = 1/3 sits on the ball's boundary.
  auto c = eb_certificate(werner_holevo(3, 1.0 / 3));
  CHECK(c.is_true());
  CHECK(has(c.provenance, "separable-ball (external)"));
  // The identity on M3 fails PPT before the ball is consulted.
  CHECK(eb_certificate(identity_channel(3)).is_false());
}

TEST_CASE("EB implies PPT") {
  Rng rng(62);
  for (int n = 0; n < 60; ++n) {
    int di = rng.uniform_int(1, 3), dout = rng.uniform_int(1, 3);
    KrausRep k = n % 2 ? qtest::random_cp(rng, di, dout, rng.uniform_int(1, 4))
                       : holevo_to_kraus(random_holevo(rng, di, dout, 2));
    if (eb_certificate(k).is_true()) CHECK(is_ppt(k).is_true());
  }
  for (double lam : {-1.0, -0.5, 0.0, 0.25, 0.5}) {
    auto w = werner_holevo(2, lam);
    if (eb_certificate(w).is_true()) CHECK(is_ppt(w).is_true());
  }
}

TEST_CASE("degradable_seb_test on the shared-state channel") {
  auto c = degradable_seb_test(qtest::shared_state_holevo());
  CHECK(c.is_false());
  REQUIRE(c.witness.index_pair.has_value());
  CHECK(c.witness.index_pair->first == 2);
  CHECK(c.witness.index_pair->second == 3);
  // Oracle: |<v_2, v_3>| with v_2 = v_3 = e_2 / sqrt 2.
  Vector v2 = ket(2, 1) / std::sqrt(2.0), v3 = v2;
  CHECK(std::abs(*c.witness.scalar("inner_product_abs") - std::abs(v2.dot(v3))) < 1e-9);
}

TEST_CASE("degradable_seb_test examples") {
  Rng rng(63);
  Vector u = rng.ginibre(3, 1), v = rng.ginibre(2, 1);
  v.normalize();
  Matrix r = qtest::random_psd(rng, 2, 2);
  HolevoForm one{3, 2, {{u * u.adjoint(), r / r.trace().real()}}};
  CHECK(degradable_seb_test(one).is_true());

  // u = (e1, 2 e1, e2): the first two effects share a class.
  Vector v1 = ket(3, 0), v2 = (ket(3, 0) + ket(3, 1)).normalized(), v3 = ket(3, 2);
  HolevoForm h{2, 3, {}};
  h.pairs.push_back({unit(2, 0, 0), v1 * v1.adjoint()});
  h.pairs.push_back({4.0 * unit(2, 0, 0), v2 * v2.adjoint()});
  h.pairs.push_back({unit(2, 1, 1), v3 * v3.adjoint()});
  auto c = degradable_seb_test(h);
  CHECK(c.is_true());
  CHECK(*c.witness.scalar("classes") == 2);
  auto g = group_holevo(h);
  REQUIRE(g.classes.size() == 2);
  CHECK(g.classes[0].members == std::vector<int>{0, 1});
  CHECK(choi_distance(holevo_to_kraus(to_holevo(g)), holevo_to_kraus(h)) < 1e-10);

  HolevoForm full{2, 2, {{Matrix::Identity(2, 2), unit(2, 0, 0)}}};
  CHECK_THROWS_AS(degradable_seb_test(full), PreconditionError);
}

TEST_CASE("grouping reproduces the channel") {
  Rng rng(64);
  for (int n = 0; n < 30; ++n) {
    int di = rng.uniform_int(1, 4), dout = rng.uniform_int(1, 4);
    auto h = random_rank_one_holevo(rng, di, dout, rng.uniform_int(1, 5));
    // Duplicate one direction so some classes have several members.
    h.pairs.push_back({2.0 * h.pairs[0].F, h.pairs.back().R});
    auto g = group_holevo(h);
    CHECK(choi_distance(holevo_to_kraus(to_holevo(g)), holevo_to_kraus(h)) < 1e-9);
    int members = 0;
    for (const auto& cl : g.classes) members += static_cast<int>(cl.members.size());
    CHECK(members == static_cast<int>(h.pairs.size()));
  }
}

TEST_CASE("degradable_seb_test is invariant under permutation and rescaling") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    HolevoForm h = seed % 2 ? random_degradable_seb(3, 4, 2, seed) : random_seb_violator(3, 4, 2, seed);
    const Verdict base = degradable_seb_test(h).verdict;
    Rng rng(seed);
    HolevoForm p = h;
    std::vector<int> idx(h.pairs.size());
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = static_cast<int>(idx.size()) - 1; i > 0; --i) std::swap(idx[i], idx[rng.uniform_int(0, i)]);
    for (std::size_t i = 0; i < idx.size(); ++i) p.pairs[i] = h.pairs[idx[i]];
    CHECK(degradable_seb_test(p).verdict == base);
    HolevoForm s = h;
    for (auto& pr : s.pairs) pr.F *= 0.25 + 3 * rng.uniform();
    CHECK(degradable_seb_test(s).verdict == base);
  }
}

TEST_CASE("self_complement_witness") {
  HolevoForm pin{3, 3, {}};
  for (int j = 0; j < 3; ++j) pin.pairs.push_back({unit(3, j, j), unit(3, j, j)});
  auto w = self_complement_witness(pin);
  CHECK(w.w.rows() == 3);
  CHECK(w.w.cols() == 3);
  CHECK((w.w.adjoint() * w.w - Matrix::Identity(3, 3)).norm() < 1e-12);
  // Columns are the standard basis vectors up to phase.
  CHECK((w.w.cwiseAbs() - Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-12);
  CHECK(w.residual <= 1e-8);

  Rng rng(65);
  Vector u = rng.ginibre(2, 1), v = rng.ginibre(3, 1);
  v.normalize();
  HolevoForm one{2, 3, {{u * u.adjoint(), v * v.adjoint()}}};
  w = self_complement_witness(one);
  REQUIRE(w.w.cols() == 1);
  CHECK(std::abs(std::abs(v.dot(w.w.col(0))) - 1.0) < 1e-12);

  Matrix r = rng.ginibre(3, 2);
  r = r * r.adjoint();
  HolevoForm mixed{2, 3, {{u * u.adjoint(), r / r.trace().real()}}};
  w = self_complement_witness(mixed);
  REQUIRE(w.w.cols() == 2);
  Matrix proj = w.w * w.w.adjoint();
  CHECK((proj * r - r).norm() < 1e-10);
  CHECK(w.residual <= 1e-8);

  CHECK_THROWS_AS(self_complement_witness(qtest::shared_state_holevo()), PreconditionError);
}

TEST_CASE("seb_antidegrading_map") {
  Rng rng(66);
  Vector u = rng.ginibre(2, 1), v = rng.ginibre(3, 1);
  KrausRep single = make_kraus(2, 3, {Matrix(v * u.adjoint())});
  auto g = seb_antidegrading_map(single);
  CHECK(g.d_in == 1);
  CHECK(choi_distance(compose(g, complement_from_kraus(single)), single) < 1e-12);

  auto h = qtest::shared_state_holevo();
  g = seb_antidegrading_map(h);
  auto phi = holevo_to_kraus(h);
  CHECK(choi_distance(compose(g, complement_from_kraus(phi)), phi) <= 1e-9);
  CHECK(is_trace_preserving(g));

  g = seb_antidegrading_map(pinching(3));
  CHECK(choi_distance(g, pinching(3)) < 1e-12);
  CHECK_THROWS_AS(seb_antidegrading_map(identity_channel(2)), PreconditionError);
}

TEST_CASE("seb_antidegrading_map composition residual") {
  Rng rng(67);
  for (int n = 0; n < 40; ++n) {
    auto h = random_holevo(rng, rng.uniform_int(1, 4), rng.uniform_int(1, 4), rng.uniform_int(1, 3));
    auto phi = holevo_to_kraus(h);
    auto g = seb_antidegrading_map(h);
    CHECK(choi_distance(compose(g, complement_from_kraus(phi)), phi) <= 10 * 1e-9);
    CHECK(is_trace_preserving(g));
  }
}

TEST_CASE("degradability_via_inverse examples") {
  Rng rng(68);
  Matrix a = rng.ginibre(3, 3);
  auto ad = ad_operator(a);
  auto c = degradability_via_inverse(ad);
  CHECK(c.is_true());
  CHECK(has(c.provenance, "unique-inverse"));
  const KrausRep* gamma = c.witness.map("degrading_map");
  REQUIRE(gamma != nullptr);
  CHECK(gamma->d_out == 1);
  CHECK(degrades(*gamma, ad));

  c = degradability_via_inverse(identity_channel(2));
  CHECK(c.is_true());

  c = degradability_via_inverse(holevo_to_kraus(qtest::shared_state_holevo()));
  CHECK(c.is_false());

  c = degradability_via_inverse(pinching(3));
  CHECK(c.is_true());
  gamma = c.witness.map("degrading_map");
  REQUIRE(gamma != nullptr);
  CHECK(degrades(*gamma, pinching(3)));
}

TEST_CASE("degrading maps are verified independently") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto k = random_channel(2, 2, 2, seed);
    auto c = degradability_via_inverse(k);
    if (c.is_true()) CHECK(degrades(*c.witness.map("degrading_map"), k));
  }
  // Amplitude damping is degradable for gamma < 1/2.
  for (double gm : {0.1, 0.3, 0.45}) {
    Matrix k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1 - gm);
    k1 << 0, std::sqrt(gm), 0, 0;
    auto ad = make_kraus(2, 2, {k0, k1});
    auto c = degradability_via_inverse(ad);
    REQUIRE(c.is_true());
    CHECK(degrades(*c.witness.map("degrading_map"), ad));
  }
}

TEST_CASE("degradable and PPT maps are not EB-refuted") {
  Rng rng(69);
  for (int n = 0; n < 40; ++n) {
    auto k = n % 2 ? random_channel(2, 2, rng.uniform_int(1, 4), n) : random_channel(2, 3, 2, n);
    if (is_ppt(k).is_true() && degradability_via_inverse(k).is_true())
      CHECK_FALSE(eb_certificate(k).is_false());
  }
}

TEST_CASE("antidegradable_test") {
  Rng rng(70);
  for (int n = 0; n < 10; ++n) {
    auto h = random_holevo(rng, 2, 3, 2);
    CHECK(antidegradable_test(h).is_true());
  }
  auto c = antidegradable_test(identity_channel(2));
  CHECK(c.is_false());
  CHECK(has(c.provenance, "complement-route"));
  CHECK(antidegradable_test(pinching(3)).is_true());
}

TEST_CASE("cstar_extreme_test") {
  for (int d = 2; d <= 4; ++d) {
    auto c = cstar_extreme_test(pinching(d));
    CHECK(c.is_true());
    CHECK(*c.witness.scalar("choi_rank") == d);
  }
  auto phi = holevo_to_kraus(qtest::shared_state_holevo());
  CHECK(is_unital(phi));
  CHECK(cstar_extreme_test(phi).is_false());
  // The dual is trace preserving but sends I to diag(1, 1/2, 1/2).
  CHECK_FALSE(is_unital(dual(phi)));
  CHECK(cstar_extreme_test(dual(phi)).is_false());
}

TEST_CASE("cstar_extreme_test on canonical forms") {
  Rng rng(71);
  for (int n = 0; n < 20; ++n) {
    int d1 = rng.uniform_int(2, 4), d2 = rng.uniform_int(2, 4);
    Matrix vb = rng.haar_isometry(d2, d2);
    std::vector<Vector> us, vs;
    for (int i = 0; i < d2; ++i) {
      Vector x = rng.ginibre(d1, 1);
      us.push_back(x.normalized());
      vs.push_back(vb.col(i));
    }
    auto k = cstar_extreme_gen(us, vs);
    CHECK(is_unital(k));
    auto c = cstar_extreme_test(k);
    CHECK(c.is_true());
    // The extracted witness reproduces the map.
    const Matrix* u = c.witness.matrix("u");
    const Matrix* v = c.witness.matrix("v");
    REQUIRE(u != nullptr);
    REQUIRE(v != nullptr);
    std::vector<Matrix> ops;
    for (int i = 0; i < d2; ++i) ops.push_back(v->col(i) * u->col(i).adjoint());
    CHECK(choi_distance(make_kraus(d1, d2, ops), k) < 1e-8);
  }
}

TEST_CASE("cstar verdict of a unital channel matches its dual") {
  Rng rng(72);
  for (int n = 0; n < 20; ++n) {
    int d = rng.uniform_int(2, 3);
    // Orthonormal u's give a unital channel; mixing two of them raises the
    // Choi rank.
    Matrix ub = rng.haar_isometry(d, d), vb = rng.haar_isometry(d, d);
    std::vector<Vector> us, vs;
    for (int i = 0; i < d; ++i) us.push_back(ub.col(i)), vs.push_back(vb.col(i));
    auto k = cstar_extreme_gen(us, vs);
    if (n % 2) {
      std::vector<Vector> vs2(vs.rbegin(), vs.rend());
      auto k2 = cstar_extreme_gen(us, vs2);
      std::vector<Matrix> ops;
      for (const auto& a : k.ops) ops.push_back(a / std::sqrt(2.0));
      for (const auto& a : k2.ops) ops.push_back(a / std::sqrt(2.0));
      k = make_kraus(d, d, ops);
    }
    REQUIRE(is_unital(k));
    REQUIRE(is_trace_preserving(k));
    CHECK(cstar_extreme_test(k).verdict == cstar_extreme_test(dual(k)).verdict);
    CHECK(cstar_extreme_test(k).is_true() == (n % 2 == 0));
  }
}

TEST_CASE("choi projection bundle on Schur complements") {
  Rng rng(73);
  for (int n = 0; n < 10; ++n) {
    int d = rng.uniform_int(2, 3);
    Matrix g = rng.ginibre(d, d);
    for (int j = 0; j < d; ++j) g.col(j).normalize();
    Matrix a = g.adjoint() * g;  // unit diagonal
    auto k = schur_complement_map(a);
    REQUIRE(choi_projection_precondition(k).empty());
    auto b = choi_projection_equivalences(k);
    REQUIRE(b.conditions.size() == 5);
    for (const auto& c : b.conditions) CHECK(c.is_true());
    CHECK(b.consistent);
    CHECK(b.factorization_residual <= 1e-8);
    CHECK((b.u.cwiseAbs() - Eigen::MatrixXd::Identity(d, d)).norm() < 1e-8);
    CHECK((b.b.adjoint() * b.b - b.a.transpose()).norm() < 1e-8);
    // Independent rebuild: X -> sum_j <u_j, X u_j> |v_j><v_j|.
    std::vector<Matrix> ops;
    for (int j = 0; j < d; ++j) ops.push_back(b.b.col(j) * b.u.col(j).adjoint());
    CHECK(choi_distance(make_kraus(d, d, ops), k) < 1e-8);
    Matrix c = choi_from_kraus(k).mat;
    CHECK((c * c - c).norm() < 1e-9);
  }
}

TEST_CASE("choi projection bundle refutations") {
  // Werner-Holevo at lambda = 1 on M2 is not PPT, so the bundle does not apply.
  auto w1 = werner_holevo(2, 1.0, WernerRange::CompletelyPositive);
  CHECK_FALSE(choi_projection_precondition(w1).empty());
  CHECK_THROWS_AS(choi_projection_equivalences(w1), PreconditionError);
  Matrix c = choi_from_kraus(w1).mat;
  CHECK((c * c - c).norm() > 1e-3);

  for (auto k : {phi_lambda(2, 0.5), werner_holevo(2, 0.5), werner_holevo(3, 1.0 / 3)}) {
    REQUIRE(choi_projection_precondition(k).empty());
    auto b = choi_projection_equivalences(k);
    for (const auto& cert : b.conditions) CHECK(cert.is_false());
    CHECK(b.consistent);
  }
}

TEST_CASE("schur_characterization") {
  auto s = schur_characterization(qtest::diag({1, 2, 3}));
  CHECK(s.seb.is_true());
  CHECK(s.complement_seb.is_true());
  CHECK(s.complement_degradable.is_true());

  s = schur_characterization(Matrix::Ones(2, 2));
  CHECK(s.seb.is_false());
  CHECK(s.complement_seb.is_true());
  CHECK(s.complement_degradable.is_false());

  Rng rng(74);
  Matrix a = qtest::random_psd(rng, 4, 3);
  s = schur_characterization(a);
  // <z_i, z_j> = a_ij.
  CHECK((s.z.adjoint() * s.z - a).norm() < 1e-10);
  CHECK_THROWS_AS(schur_characterization(qtest::diag({1, -1})), ParameterError);
}

TEST_CASE("schur_characterization matches diagonality") {
  Rng rng(75);
  for (int n = 0; n < 40; ++n) {
    int d = rng.uniform_int(2, 5);
    Matrix a = qtest::random_psd(rng, d, d);
    const bool diagonal = n % 2 == 0;
    if (diagonal) a = Matrix(a.diagonal().asDiagonal());
    double mass = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i != j) mass += std::norm(a(i, j));
    CHECK((std::sqrt(mass) <= 1e-9) == diagonal);
    auto s = schur_characterization(a);
    CHECK(s.seb.is_true() == diagonal);
    CHECK(s.complement_degradable.is_true() == diagonal);
    CHECK(eb_certificate(schur_map(a)).is_false() == !diagonal);
  }
}

}  // TEST_SUITE
