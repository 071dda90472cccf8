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

#include <cstdint>
#include <vector>

#include "qchan/matcore.hpp"
#include "qchan/reprs.hpp"

namespace qchan {

enum class ZooFamily {
  Schur,
  SchurComplement,
  WernerHolevo,
  PhiLambda,
  Pinching,
  DirectSumPure,
  CStarExtremeGen,
  HolevoGen,
  AdOperator,
};

// Gram factor B of a PSD matrix a with B^*B = a^T (Hermitian square root).
Matrix schur_gram_factor(const Matrix& a, const Tolerance& tol = {});

// T -> a (.) T. Kraus operators A_k = diag(row k of B).
KrausRep schur_map(const Matrix& a, const Tolerance& tol = {});

// X -> sum_j X_jj |w_j><w_j| with w_j the j-th column of the Gram factor,
// which is the complement produced by complement_from_kraus(schur_map(a)).
KrausRep schur_complement_map(const Matrix& a, const Tolerance& tol = {});
HolevoForm schur_complement_holevo(const Matrix& a, const Tolerance& tol = {});

// Same construction for an explicit factor b (columns b_j, any b with
// b^*b = a^T gives a map in the same complementary class).
KrausRep schur_complement_from_factor(const Matrix& b);

// Parameter window accepted by werner_holevo. The default is the
// entanglement-breaking window [-1, 1/d]; the wider window [-1, 1] is where
// the map is still completely positive.
enum class WernerRange { EntanglementBreaking, CompletelyPositive };

// X -> (tr(X) I - lambda X^T) / (d - lambda).
ChoiMatrix werner_holevo_choi(int d, double lambda,
                              WernerRange range = WernerRange::EntanglementBreaking);
KrausRep werner_holevo(int d, double lambda,
                       WernerRange range = WernerRange::EntanglementBreaking,
                       const Tolerance& tol = {});

// X -> (tr(X) I + lambda (X + X^T)) / (2 lambda + d), lambda in [-1/(d+1), 1].
ChoiMatrix phi_lambda_choi(int d, double lambda);
KrausRep phi_lambda(int d, double lambda, const Tolerance& tol = {});

KrausRep pinching(int d);
KrausRep ad_operator(const Matrix& a);

struct DirectSum {
  KrausRep channel;    // X -> diag(V_1^* X V_1, ..., V_k^* X V_k)
  KrausRep degrading;  // block matrix -> diag of block traces
};
DirectSum direct_sum_pure(const std::vector<Matrix>& vs);

// X -> sum_i <u_i, X u_i> |v_i><v_i| with unit u_i and orthonormal v_i.
KrausRep cstar_extreme_gen(const std::vector<Vector>& us,
                           const std::vector<Vector>& vs,
                           const Tolerance& tol = {});

// Trace-preserving channel with Choi rank cr (generic), from a Haar-like
// Stinespring isometry. Requires cr <= d_in*d_out and cr*d_out >= d_in.
KrausRep random_channel(int d_in, int d_out, int cr, std::uint64_t seed);

// Rank-one-effect Holevo form whose proportionality classes carry states with
// mutually orthogonal supports.
HolevoForm random_degradable_seb(int d_in, int d_out, int classes,
                                 std::uint64_t seed);

// As above, but one state of the first class is rotated so that it overlaps
// the support of the second class. Needs d_in >= 2 and 2 <= classes <= d_out.
HolevoForm random_seb_violator(int d_in, int d_out, int classes,
                               std::uint64_t seed);

}  // namespace qchan
