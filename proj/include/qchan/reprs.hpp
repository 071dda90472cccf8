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

#include <vector>

#include "qchan/matcore.hpp"

namespace qchan {

// Schrodinger-picture CP map T -> sum_j A_j T A_j^*, each A_j d_out x d_in.
struct KrausRep {
  int d_in = 0;
  int d_out = 0;
  std::vector<Matrix> ops;
};

// C = sum_ij E_ij (x) Phi(E_ij); input factor first, output factor second.
// Block (i,j) is Phi(E_ij). Every reshape in the library follows this order.
struct ChoiMatrix {
  int d_in = 0;
  int d_out = 0;
  Matrix mat;
};

// a : C^d_in -> C^d_out (x) C^env_dim, row index r * env_dim + j.
struct StinespringRep {
  int d_in = 0;
  int d_out = 0;
  int env_dim = 0;
  Matrix a;
};

struct HolevoPair {
  Matrix F;  // effect on the input space
  Matrix R;  // unit-trace state on the output space
};

// T -> sum_j tr(T F_j) R_j.
struct HolevoForm {
  int d_in = 0;
  int d_out = 0;
  std::vector<HolevoPair> pairs;
};

// Checks dimensions, drops zero operators and rejects an all-zero list.
KrausRep make_kraus(int d_in, int d_out, std::vector<Matrix> ops);
ChoiMatrix make_choi(int d_in, int d_out, Matrix mat);
void validate(const HolevoForm& h, const Tolerance& tol = {});

Matrix apply(const KrausRep& k, const Matrix& t);
Matrix apply(const ChoiMatrix& c, const Matrix& t);
KrausRep dual(const KrausRep& k);

// g after f.
KrausRep compose(const KrausRep& g, const KrausRep& f);

ChoiMatrix choi_from_kraus(const KrausRep& k);
KrausRep kraus_from_choi(const ChoiMatrix& c, const Tolerance& tol = {});

StinespringRep stinespring_from_kraus(const KrausRep& k);
KrausRep kraus_from_stinespring(const StinespringRep& s);

KrausRep holevo_to_kraus(const HolevoForm& h, const Tolerance& tol = {});

bool is_trace_preserving(const KrausRep& k, const Tolerance& tol = {});
bool is_unital(const KrausRep& k, const Tolerance& tol = {});
int choi_rank(const KrausRep& k, const Tolerance& tol = {});

// Matrix of the map on column-major vectorisations: vec(Phi(T)) = S vec(T).
Matrix superoperator(const KrausRep& k);
ChoiMatrix choi_from_superoperator(const Matrix& s, int d_in, int d_out);

// Frobenius distance between the Choi matrices of two maps.
double choi_distance(const KrausRep& a, const KrausRep& b);

// If every operator has rank one, returns the pairs (v_j, u_j) with
// A_j = |v_j><u_j| and ||u_j|| = 1; otherwise an empty list.
struct RankOneTerm {
  Vector v;
  Vector u;
};
std::vector<RankOneTerm> rank_one_terms(const KrausRep& k,
                                        const Tolerance& tol = {});

// Holevo form of a map with rank-one Kraus operators; F_j = ||v_j||^2 |u_j><u_j|.
HolevoForm holevo_from_rank_one(const KrausRep& k, const Tolerance& tol = {});

}  // namespace qchan
