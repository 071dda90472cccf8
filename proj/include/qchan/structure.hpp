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

#include "qchan/certificate.hpp"
#include "qchan/matcore.hpp"
#include "qchan/reprs.hpp"

namespace qchan {

Certificate is_ppt(const KrausRep& k, const Tolerance& tol = {});

// Partial decision procedure: True when one of the implemented sufficient
// criteria fires, False when PPT fails, Indeterminate otherwise. The
// provenance names the criterion. Scalars er_lower / er_upper bound the
// entanglement-breaking rank.
Certificate eb_certificate(const KrausRep& k, const Tolerance& tol = {});
Certificate eb_certificate(const HolevoForm& h, const Tolerance& tol = {});
// Same verdicts, reported under the SEB property (the notions agree in
// finite dimension).
Certificate seb_certificate(const KrausRep& k, const Tolerance& tol = {});

// One proportionality class D_k of a rank-one Holevo form: every member
// effect is |lambda_j|^2 |u><u|. R is the merged, renormalised state and
// weight = tr of the unnormalised merged state, so the class contributes
// weight * <u, T u> * R.
struct HolevoClass {
  Vector u;
  Matrix R;
  double weight = 0.0;
  std::vector<int> members;  // 0-based indices into the original pairs
};

struct GroupedHolevoForm {
  int d_in = 0;
  int d_out = 0;
  std::vector<HolevoClass> classes;
};

// Requires every F_j to have rank one (PreconditionError otherwise). Two
// effects are grouped when |<u_i,u_j>| >= (1 - eps_eq) ||u_i|| ||u_j||.
GroupedHolevoForm group_holevo(const HolevoForm& h, const Tolerance& tol = {});
HolevoForm to_holevo(const GroupedHolevoForm& g);

// Degradability of a rank-one Holevo form: True iff the merged states of
// different classes multiply to zero.
Certificate degradable_seb_test(const HolevoForm& h, const Tolerance& tol = {});

struct SelfComplementWitness {
  Matrix w;  // isometry onto the span of the merged states' eigenvectors
  double residual = 0.0;
};

// Requires degradable_seb_test(h) == True. Verifies both that
// W W^* Phi(T) W W^* = Phi(T) and that T -> W^* Phi(T) W is a complement
// of Phi; residual is the larger of the two.
SelfComplementWitness self_complement_witness(const HolevoForm& h,
                                              const Tolerance& tol = {});

// Gamma with Gamma o complement_from_kraus(holevo_to_kraus(h)) = Phi.
KrausRep seb_antidegrading_map(const HolevoForm& h, const Tolerance& tol = {});
// Same for a Kraus list of rank-one operators, relative to
// complement_from_kraus(k).
KrausRep seb_antidegrading_map(const KrausRep& k, const Tolerance& tol = {});

Certificate degradability_via_inverse(const KrausRep& k,
                                      const Tolerance& tol = {});

Certificate antidegradable_test(const KrausRep& k, const Tolerance& tol = {});
Certificate antidegradable_test(const HolevoForm& h, const Tolerance& tol = {});

// Tests whether the given map is a C*-extreme point of the unital EB maps
// with its input and output dimensions: unital, EB-certified and Choi rank
// equal to d_out. To test the Heisenberg-picture map of a channel, pass
// dual(channel).
Certificate cstar_extreme_test(const KrausRep& k, const Tolerance& tol = {});

struct ChoiProjectionBundle {
  // Projection, EB with ER = d_in, C*-extreme dual, unit-vector form,
  // Schur-complement factorisation; in that order.
  std::vector<Certificate> conditions;
  bool consistent = true;
  // Factorisation data when found: columns of b are the unit vectors v_j
  // (b^* b = a^T), columns of u the orthonormal u_j.
  Matrix a;
  Matrix b;
  Matrix u;
  double factorization_residual = 0.0;
};

// Requires a trace-preserving PPT map with rank Phi(I) <= d_in.
ChoiProjectionBundle choi_projection_equivalences(const KrausRep& k,
                                                  const Tolerance& tol = {});
// Empty string when the preconditions hold, otherwise the reason.
std::string choi_projection_precondition(const KrausRep& k,
                                         const Tolerance& tol = {});

struct SchurCharacterization {
  Certificate seb;                    // of the Schur map itself
  Certificate complement_seb;         // always True
  Certificate complement_degradable;  // True iff a is diagonal
  Matrix z;                           // columns z_k with <z_i, z_j> = a_ij
};

SchurCharacterization schur_characterization(const Matrix& a,
                                             const Tolerance& tol = {});

}  // namespace qchan
