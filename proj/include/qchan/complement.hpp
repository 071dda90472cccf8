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

#include "qchan/certificate.hpp"
#include "qchan/matcore.hpp"
#include "qchan/reprs.hpp"

namespace qchan {

// A channel, one of its complements, and a dilation witnessing both:
// tracing the environment of joint gives channel, tracing the output gives
// complement.
struct ComplementPair {
  KrausRep channel;
  KrausRep complement;
  StinespringRep joint;
};

// T -> sum_ij tr(A_i T A_j^*) E_ij, environment dimension = number of Kraus
// operators. Kraus operators are the environment-side slices V_r of the
// canonical dilation: row j of V_r is row r of A_j.
KrausRep complement_from_kraus(const KrausRep& k);
ComplementPair complement_pair(const KrausRep& k);

// Complement of the minimal Kraus set; environment dimension = Choi rank.
KrausRep minimal_complement(const KrausRep& k, const Tolerance& tol = {});

enum class Relation { Related, NotRelated, Indeterminate };

struct IsometryResult {
  Relation status = Relation::NotRelated;
  Matrix v;               // empty unless a candidate was produced
  double residual = 0.0;  // relative residual of the defining equation
  std::string note;
};

// Finds V (env2 x env1, V^*V = I) with s2.a = (I_dout (x) V) s1.a.
IsometryResult connecting_isometry(const StinespringRep& s1,
                                   const StinespringRep& s2,
                                   const Tolerance& tol = {});

// Finds an isometry V with to(T) = V from(T) V^* for all T. Any such V
// intertwines the two maps, to(T) V = V from(T); the search takes a generic
// element of that linear space and keeps the isometric part of its polar
// decomposition.
IsometryResult isometric_embedding(const KrausRep& from, const KrausRep& to,
                                   const Tolerance& tol = {});

// psi belongs to the complementary class of phi: psi = Ad_V o phi^c_min.
Certificate is_complementary_pair(const KrausRep& phi, const KrausRep& psi,
                                  const Tolerance& tol = {});
Certificate is_self_complementary(const KrausRep& phi,
                                  const Tolerance& tol = {});

}  // namespace qchan
