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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qchan/matcore.hpp"
#include "qchan/reprs.hpp"

namespace qchan {

enum class Property {
  PPT,
  EB,
  SEB,
  Degradable,
  AntiDegradable,
  SelfComplementary,
  CStarExtreme,
  ChoiProjection,
  // Membership of a given map in the complementary class of another.
  Complementary,
};

enum class Verdict { True, False, Indeterminate };

const char* to_string(Property p);
const char* to_string(Verdict v);
// Inverses of to_string; throw ParseError on unknown names.
Property property_from_string(const std::string& s);
Verdict verdict_from_string(const std::string& s);

// Named witness data. Vectors are stored as single-column matrices; index
// pairs are 1-based so they match how channel terms are usually numbered.
struct Witness {
  std::vector<std::pair<std::string, double>> scalars;
  std::vector<std::pair<std::string, Matrix>> matrices;
  std::vector<std::pair<std::string, KrausRep>> maps;
  std::optional<std::pair<int, int>> index_pair;

  bool empty() const {
    return scalars.empty() && matrices.empty() && maps.empty() &&
           !index_pair.has_value();
  }
  const double* scalar(const std::string& name) const;
  const Matrix* matrix(const std::string& name) const;
  const KrausRep* map(const std::string& name) const;
};

struct Certificate {
  Property property = Property::PPT;
  Verdict verdict = Verdict::Indeterminate;
  Witness witness;
  Tolerance tolerances;
  // Names of the criteria that produced the verdict.
  std::vector<std::string> provenance;
  // Obstruction for True/False, reason for Indeterminate.
  std::string note;
  // Optional qualifier shown next to the property, e.g. "dual".
  std::string label;

  bool is_true() const { return verdict == Verdict::True; }
  bool is_false() const { return verdict == Verdict::False; }
};

}  // namespace qchan
