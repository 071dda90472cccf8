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
#include <string>
#include <utility>
#include <vector>

#include "qchan/document.hpp"
#include "qchan/matcore.hpp"

namespace qchan {

// Seeded cross-check suites over generated fixtures. Each suite checks that
// characterisations which must agree do agree on every instance.
struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  Tolerance tolerances;
  int instances = 0;
  int passed = 0;
  std::vector<std::string> failures;  // one line per failed instance
  std::vector<std::pair<std::string, double>> stats;

  bool ok() const { return passed == instances; }
};

// thm32, thm34, thm42, thm45, prop48, appA.
const std::vector<std::string>& suite_names();

// n is the number of instances per fixture class (thm32 runs n degradable
// channels and n violators). Throws ParameterError for unknown suites or
// n < 1.
SuiteResult run_suite(const std::string& suite, int n, std::uint64_t seed,
                      const Tolerance& tol = {});

std::string render_suite_text(const SuiteResult& r);
json suite_to_json(const SuiteResult& r);

// SplitMix64 step; used to derive per-instance seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace qchan
