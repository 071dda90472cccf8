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
#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

#include "qchan/analysis.hpp"
#include "qchan/document.hpp"
#include "qchan/version.hpp"

namespace qchan {

// Process exit codes; part of the public interface.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitDimension = 3,
  kExitNotCP = 4,
  kExitParameter = 5,
  kExitInternal = 6,
};

int exit_code_for(const std::exception& e);

struct GlobalOptions {
  Tolerance tol;
  bool machine = false;
  std::uint64_t seed = kDefaultSeed;
  bool timing = false;
};

// Applies QCHAN_TOL_EQ (if set) to base.eps_eq. Throws ParameterError when
// the variable is not a number.
Tolerance tolerance_from_env(Tolerance base);

// Each command writes its product to `out` (a path, or "-"/"" for `os`) and
// diagnostics to `err`, and returns an exit code; none of them throw.
int cmd_convert(const GlobalOptions& g, const std::string& in, const std::string& to,
                const std::string& out, std::ostream& os, std::ostream& err);
int cmd_analyze(const GlobalOptions& g, const std::string& in,
                const std::vector<std::string>& properties, Picture picture,
                const std::string& out, std::ostream& os, std::ostream& err);
int cmd_complement(const GlobalOptions& g, const std::string& in, bool minimal,
                   const std::string& out, std::ostream& os, std::ostream& err);
int cmd_verify(const GlobalOptions& g, const std::string& suite, int n,
               std::ostream& os, std::ostream& err);
int cmd_zoo(const GlobalOptions& g, const std::string& family, const json& params,
            const std::string& out, std::ostream& os, std::ostream& err);

std::string read_input(const std::string& path);

}  // namespace qchan
