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
#include <vector>

#include "qchan/document.hpp"
#include "qchan/report.hpp"
#include "qchan/version.hpp"

namespace qchan {

// Which side of the channel the C*-extremality test is run on.
enum class Picture { Map, Dual, Both };

struct AnalyzeOptions {
  Tolerance tol;
  std::uint64_t seed = kDefaultSeed;
  // Subset of analysis_property_names(); empty means all.
  std::vector<std::string> properties;
  Picture picture = Picture::Both;
  bool timing = false;
};

// ppt, eb, seb, degradable, antidegradable, selfcomplementary, cstar,
// choiprojection, in report order.
const std::vector<std::string>& analysis_property_names();

struct AnalysisResult {
  Report report;
  // False when certificates that must agree did not; the report is still
  // complete so the disagreement can be inspected.
  bool consistent = true;
  std::string inconsistency;
};

// Throws the library's error types for malformed or invalid input.
AnalysisResult analyze_document(const ChannelDocument& doc,
                                const AnalyzeOptions& opt);

}  // namespace qchan
