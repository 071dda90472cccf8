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
#include <random>

#include "qchan/matcore.hpp"

namespace qchan {

// Recorded in generated documents so fixtures can be regenerated elsewhere.
inline constexpr const char* kPrngName = "mt19937_64/box-muller/v1";

// Uniforms take the top 53 bits of each draw and normals use the
// Box-Muller cosine branch, so streams do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  cplx complex_normal();  // E|z|^2 = 1
  int uniform_int(int lo, int hi);  // inclusive

  Matrix ginibre(int rows, int cols);
  // Columns of a Haar-random isometry (rows >= cols).
  Matrix haar_isometry(int rows, int cols);
  Matrix random_state(int d, int rank);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qchan
