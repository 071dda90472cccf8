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

#include "qchan/certificate.hpp"

#include "qchan/errors.hpp"

namespace qchan {

const char* to_string(Property p) {
  switch (p) {
    case Property::PPT: return "PPT";
    case Property::EB: return "EB";
    case Property::SEB: return "SEB";
    case Property::Degradable: return "Degradable";
    case Property::AntiDegradable: return "AntiDegradable";
    case Property::SelfComplementary: return "SelfComplementary";
    case Property::CStarExtreme: return "CStarExtreme";
    case Property::ChoiProjection: return "ChoiProjection";
    case Property::Complementary: return "Complementary";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "True";
    case Verdict::False: return "False";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

Property property_from_string(const std::string& s) {
  for (Property p : {Property::PPT, Property::EB, Property::SEB, Property::Degradable,
                     Property::AntiDegradable, Property::SelfComplementary,
                     Property::CStarExtreme, Property::ChoiProjection,
                     Property::Complementary}) {
    if (s == to_string(p)) return p;
  }
  throw ParseError("unknown property \"" + s + "\"");
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::True, Verdict::False, Verdict::Indeterminate}) {
    if (s == to_string(v)) return v;
  }
  throw ParseError("unknown verdict \"" + s + "\"");
}

template <typename T>
static const T* find_named(const std::vector<std::pair<std::string, T>>& xs,
                           const std::string& name) {
  for (const auto& [k, v] : xs) {
    if (k == name) return &v;
  }
  return nullptr;
}

const double* Witness::scalar(const std::string& name) const {
  return find_named(scalars, name);
}
const Matrix* Witness::matrix(const std::string& name) const {
  return find_named(matrices, name);
}
const KrausRep* Witness::map(const std::string& name) const {
  return find_named(maps, name);
}

}  // namespace qchan
