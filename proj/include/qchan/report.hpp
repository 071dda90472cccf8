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

#include "qchan/certificate.hpp"
#include "qchan/document.hpp"

namespace qchan {

struct ReportEntry {
  Certificate cert;
  double wall_ms = 0.0;
};

struct Report {
  std::string version;
  std::string input_digest;  // hex FNV-1a 64 of the canonical document
  std::string input_name;    // metadata "name", may be empty
  std::string input_kind;
  int d_in = 0;
  int d_out = 0;
  Tolerance tolerances;
  std::uint64_t seed = 0;
  bool timing = false;  // wall times are only emitted when set
  std::vector<ReportEntry> entries;

  bool operator==(const Report& o) const;
};

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

json report_to_json(const Report& r);
Report report_from_json(const json& j);

// Fixed-precision text form. Numbers use 8 significant digits and values
// below 1e-10 in magnitude print as 0, so the text is stable across
// platforms and round-off.
std::string render_text(const Report& r);
std::string render_machine(const Report& r);

std::string format_number(double x);
std::string format_complex(cplx z);

}  // namespace qchan
