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

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

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

Matrix flip(int d) {
  Matrix f = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  return f;
}

// Maps given by formula, evaluated on the basis to build Choi matrices
// independently of the library's constructors.
template <class F>
Matrix choi_of(int d, F f) {
  Matrix c = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) c.block(i * d, j * d, d, d) = f(unit(d, i, j));
  return c;
}

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
  return g;
}

}  // namespace

TEST_SUITE("zoo") {

TEST_CASE("schur_map examples") {
  Rng rng(80);
  auto id = schur_map(Matrix::Ones(3, 3));
  CHECK(choi_distance(id, make_kraus(3, 3, {Matrix::Identity(3, 3)})) < 1e-10);
  CHECK(choi_distance(schur_map(Matrix::Identity(3, 3)), pinching(3)) < 1e-10);

  cplx c(0.3, -0.4);
  Matrix a(2, 2);
  a << 1, c, std::conj(c), 1;
  Matrix t = rng.ginibre(2, 2), expect(2, 2);
  expect << t(0, 0), c * t(0, 1), std::conj(c) * t(1, 0), t(1, 1);
  CHECK((qchan::apply(schur_map(a), t) - expect).norm() < 1e-12);
  CHECK_THROWS_AS(schur_map(qtest::diag({1, -1})), ParameterError);
  CHECK_THROWS_AS(schur_map(Matrix::Ones(2, 3)), DimensionError);
}

TEST_CASE("schur_map is the entrywise product") {
  Rng rng(81);
  for (int n = 0; n < 100; ++n) {
    int d = rng.uniform_int(1, 5);
    Matrix a = qtest::random_psd(rng, d, rng.uniform_int(1, d));
    Matrix t = rng.ginibre(d, d);
    Matrix expect(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) expect(i, j) = a(i, j) * t(i, j);
    CHECK((qchan::apply(schur_map(a), t) - expect).norm() <= 1e-9 * std::max(1.0, expect.norm()));
  }
}

TEST_CASE("schur_complement_map examples") {
  Rng rng(82);
  // Complement of the identity: a trace map onto one pure state.
  auto c = schur_complement_map(Matrix::Ones(2, 2));
  Matrix t = qtest::random_hermitian(rng, 2);
  Matrix out = qchan::apply(c, t);
  CHECK(rank_tol(out) == 1);
  CHECK(std::abs(out.trace() - t.trace()) < 1e-12);
  CHECK(is_complementary_pair(make_kraus(2, 2, {Matrix::Identity(2, 2)}), c).is_true());

  // Diagonal a: orthogonal output states.
  c = schur_complement_map(qtest::diag({1, 2, 3}));
  Matrix e = qchan::apply(c, Matrix::Identity(3, 3));
  CHECK((e - Matrix(e.diagonal().asDiagonal())).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("schur complement is complementary to the Schur map") {
  Rng rng(83);
  for (int n = 0; n < 20; ++n) {
    int d = rng.uniform_int(2, 4);
    Matrix a = qtest::random_psd(rng, d, d);
    auto s = schur_map(a);
    CHECK(is_complementary_pair(s, schur_complement_map(a)).is_true());
    CHECK(is_complementary_pair(s, complement_from_kraus(s)).is_true());
    CHECK(choi_distance(holevo_to_kraus(schur_complement_holevo(a)), schur_complement_map(a)) < 1e-9);
  }
}

TEST_CASE("schur complement with unit diagonal has a projection Choi matrix") {
  Rng rng(84);
  for (int n = 0; n < 10; ++n) {
    int d = rng.uniform_int(2, 4);
    Matrix g = rng.ginibre(d, d);
    for (int j = 0; j < d; ++j) g.col(j).normalize();
    Matrix c = choi_from_kraus(schur_complement_map(g.adjoint() * g)).mat;
    CHECK((c * c - c).norm() < 1e-10);
    Matrix c2 = choi_from_kraus(schur_complement_map(2.0 * g.adjoint() * g)).mat;
    CHECK((c2 * c2 - c2).norm() > 1e-3);
  }
}

TEST_CASE("werner_holevo") {
  // (I - F) / (2 - 1): the flip has spectrum (1,1,1,-1).
  auto c = werner_holevo_choi(2, 1.0, WernerRange::CompletelyPositive).mat;
  Matrix oracle = Matrix::Identity(4, 4) - flip(2);
  CHECK((c - oracle).norm() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Matrix> es(oracle);
  auto ev = es.eigenvalues();
  CHECK(std::abs(ev(0)) < 1e-12);
  CHECK(std::abs(ev(3) - 2.0) < 1e-12);
  auto mine = eig_hermitian(c).values;
  CHECK(std::abs(mine(0) - 2.0) < 1e-9);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(mine(i)) < 1e-9);

  for (int d = 2; d <= 3; ++d)
    for (double lam : grid(-1.0, 1.0 / d, 20)) {
      auto k = werner_holevo(d, lam);
      Matrix expect = choi_of(d, [&](const Matrix& x) {
        return Matrix((x.trace() * Matrix::Identity(d, d) - lam * x.transpose()) / (d - lam));
      });
      CHECK((choi_from_kraus(k).mat - expect).norm() < 1e-9);
      CHECK(is_trace_preserving(k));
      CHECK(is_unital(k));
      CHECK(is_ppt(k).is_true());
      Matrix cm = choi_from_kraus(k).mat;
      CHECK((cm * cm - cm).norm() > 1e-9);
    }

  CHECK_THROWS_AS(werner_holevo(2, 1.5), ParameterError);
  CHECK_THROWS_AS(werner_holevo(2, 0.6), ParameterError);
  CHECK_NOTHROW(werner_holevo(2, 0.6, WernerRange::CompletelyPositive));
  CHECK_THROWS_AS(werner_holevo(2, -1.1), ParameterError);
  CHECK_THROWS_AS(werner_holevo(1, 0.0), ParameterError);
}

TEST_CASE("phi_lambda") {
  Rng rng(85);
  auto k0 = phi_lambda(3, 0.0);
  Matrix t = rng.ginibre(3, 3);
  CHECK((qchan::apply(k0, t) - t.trace() * Matrix::Identity(3, 3) / 3.0).norm() < 1e-12);

  for (int d = 2; d <= 3; ++d)
    for (double lam : grid(-1.0 / (d + 1), 1.0, 20)) {
      auto k = phi_lambda(d, lam);
      Matrix expect = choi_of(d, [&](const Matrix& x) {
        return Matrix((x.trace() * Matrix::Identity(d, d) + lam * (x + x.transpose())) / (2 * lam + d));
      });
      CHECK((choi_from_kraus(k).mat - expect).norm() < 1e-9);
      CHECK(is_trace_preserving(k));
      CHECK(is_ppt(k).is_true());
      CHECK_FALSE(eb_certificate(k).is_false());
    }
  CHECK_THROWS_AS(phi_lambda(2, 1.5), ParameterError);
  CHECK_THROWS_AS(phi_lambda(2, -0.5), ParameterError);
}

TEST_CASE("pinching and ad_operator") {
  CHECK(pinching(4).ops.size() == 4);
  CHECK(is_self_complementary(pinching(2)).is_true());
  Rng rng(86);
  Matrix a = rng.ginibre(3, 3);
  CHECK(degradability_via_inverse(ad_operator(a)).is_true());
  Vector x = rng.ginibre(3, 1), y = rng.ginibre(2, 1);
  auto r1 = ad_operator(y * x.adjoint());
  CHECK(seb_certificate(r1).is_true());
  CHECK(antidegradable_test(r1).is_true());
}

TEST_CASE("direct_sum_pure") {
  Rng rng(87);
  Vector v1 = rng.ginibre(3, 1).normalized(), v2 = rng.ginibre(3, 1).normalized();
  auto ds = direct_sum_pure({v1, v2});
  CHECK(ds.channel.d_in == 3);
  CHECK(ds.channel.d_out == 2);
  auto comp = complement_from_kraus(ds.channel);
  CHECK(qtest::basis_distance(compose(ds.degrading, ds.channel), comp) <= 1e-8);

  Matrix v = rng.haar_isometry(3, 2);
  auto single = direct_sum_pure({v});
  CHECK(choi_distance(single.channel, make_kraus(3, 2, {Matrix(v.adjoint())})) < 1e-12);

  CHECK_THROWS_AS(direct_sum_pure({Matrix::Ones(3, 1), Matrix::Ones(2, 1)}), DimensionError);
  CHECK_THROWS_AS(direct_sum_pure({}), ParameterError);
}

TEST_CASE("direct_sum_pure blocks and witness") {
  Rng rng(88);
  for (int n = 0; n < 20; ++n) {
    int d = rng.uniform_int(2, 4), k = rng.uniform_int(1, 3);
    std::vector<Matrix> vs;
    for (int i = 0; i < k; ++i) vs.push_back(rng.haar_isometry(d, rng.uniform_int(1, d)));
    auto ds = direct_sum_pure(vs);
    const auto& ops = ds.channel.ops;
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = 0; j < ops.size(); ++j)
        if (i != j) CHECK((ops[j].adjoint() * ops[i]).norm() < 1e-14);
    // Oracle: sum_j tr(V_j^* X V_j) E_jj.
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        Matrix x = unit(d, a, b), expect = Matrix::Zero(k, k);
        for (int j = 0; j < k; ++j) expect(j, j) = (vs[j].adjoint() * x * vs[j]).trace();
        CHECK((qchan::apply(compose(ds.degrading, ds.channel), x) - expect).norm() < 1e-10);
      }
    CHECK(is_complementary_pair(ds.channel, compose(ds.degrading, ds.channel)).is_true());
  }
}

TEST_CASE("cstar_extreme_gen") {
  std::vector<Vector> us(3, ket(2, 0)), vs;
  for (int i = 0; i < 3; ++i) vs.push_back(ket(3, i));
  auto k = cstar_extreme_gen(us, vs);
  Rng rng(89);
  Matrix t = rng.ginibre(2, 2);
  CHECK((qchan::apply(k, t) - t(0, 0) * Matrix::Identity(3, 3)).norm() < 1e-12);
  CHECK(cstar_extreme_test(k).is_true());

  for (int n = 0; n < 10; ++n) {
    int d1 = rng.uniform_int(1, 4), d2 = rng.uniform_int(1, 4);
    Matrix vb = rng.haar_isometry(d2, d2);
    std::vector<Vector> uu, vv;
    for (int i = 0; i < d2; ++i) uu.push_back(rng.ginibre(d1, 1).normalized()), vv.push_back(vb.col(i));
    CHECK(choi_rank(cstar_extreme_gen(uu, vv)) == d2);
  }

  std::vector<Vector> bad = {ket(2, 0), ket(2, 0)};
  CHECK_THROWS_AS(cstar_extreme_gen({ket(2, 0), ket(2, 1)}, bad), ParameterError);
  CHECK_THROWS_AS(cstar_extreme_gen({ket(2, 0) * 2.0, ket(2, 1)}, {ket(2, 0), ket(2, 1)}), ParameterError);
}

TEST_CASE("random generators") {
  for (std::uint64_t s = 1; s <= 10; ++s) {
    auto k = random_channel(2, 2, 4, s);
    CHECK(choi_rank(k) == 4);
    CHECK(is_trace_preserving(k));
    CHECK(degradable_seb_test(random_degradable_seb(3, 4, 2, s)).is_true());
    CHECK(degradable_seb_test(random_seb_violator(3, 4, 2, s)).is_false());
  }
  auto a = random_channel(3, 2, 3, 99), b = random_channel(3, 2, 3, 99);
  REQUIRE(a.ops.size() == b.ops.size());
  for (std::size_t i = 0; i < a.ops.size(); ++i) CHECK((a.ops[i] - b.ops[i]).norm() == 0.0);
  auto h1 = random_degradable_seb(3, 4, 2, 5), h2 = random_degradable_seb(3, 4, 2, 5);
  for (std::size_t i = 0; i < h1.pairs.size(); ++i) CHECK((h1.pairs[i].R - h2.pairs[i].R).norm() == 0.0);

  CHECK_THROWS_AS(random_channel(2, 2, 5, 1), ParameterError);
  CHECK_THROWS_AS(random_degradable_seb(3, 2, 3, 1), ParameterError);
  CHECK_THROWS_AS(random_seb_violator(1, 3, 2, 1), ParameterError);
}

TEST_CASE("Rng streams are fixed") {
  Rng a(12345), b(12345);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  Rng c(1);
  double mean = 0, var = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    double x = c.normal();
    mean += x;
    var += x * x;
  }
  CHECK(std::abs(mean / n) < 0.05);
  CHECK(std::abs(var / n - 1.0) < 0.05);
}

}  // TEST_SUITE
