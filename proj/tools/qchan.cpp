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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qchan/commands.hpp"
#include "qchan/errors.hpp"
#include "qchan/suites.hpp"

int main(int argc, char** argv) {
  using namespace qchan;
  CLI::App app{"Finite-dimensional quantum channel analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  GlobalOptions g;
  Tolerance tol;
  try {
    tol = tolerance_from_env(tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  app.add_option("--tol-eq", tol.eps_eq, "Equality tolerance");
  app.add_option("--tol-psd", tol.eps_psd, "PSD tolerance");
  app.add_option("--tol-rank", tol.eps_rank, "Relative rank cutoff");
  app.add_flag("--machine", g.machine, "Emit JSON instead of text");
  app.add_option("--seed", g.seed, "Seed for generators and suites");
  app.add_flag("--timing", g.timing, "Include wall times in reports");

  std::string in, out, to;
  auto* convert = app.add_subcommand("convert", "Convert between representations");
  convert->add_option("input", in, "Channel document (- for stdin)")->required();
  convert->add_option("--to", to, "kraus, choi, stinespring or holevo")->required();
  convert->add_option("-o,--output", out, "Output path (default stdout)");

  std::vector<std::string> props;
  std::string picture = "both";
  auto* analyze = app.add_subcommand("analyze", "Certify structural properties");
  analyze->add_option("input", in, "Channel document (- for stdin)")->required();
  analyze->add_option("--properties", props, "Subset of properties (default all)")
      ->delimiter(',');
  analyze->add_option("--picture", picture, "C*-extremality on map, dual or both")
      ->check(CLI::IsMember({"map", "dual", "both"}));
  analyze->add_option("-o,--output", out, "Output path (default stdout)");

  bool minimal = false;
  auto* complement = app.add_subcommand("complement", "Write a complementary channel");
  complement->add_option("input", in, "Channel document (- for stdin)")->required();
  complement->add_flag("--minimal", minimal, "Use the minimal Kraus family");
  complement->add_option("-o,--output", out, "Output path (default stdout)");

  std::string suite;
  int count = 50;
  auto* verify = app.add_subcommand("verify", "Run a seeded cross-check suite");
  verify->add_option("suite", suite, "thm32, thm34, thm42, thm45, prop48 or appA")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("-n,--count", count, "Instances per fixture class");

  std::string family, params_json;
  std::vector<std::string> params_kv;
  auto* zoo = app.add_subcommand("zoo", "Generate a channel family member");
  zoo->add_option("family", family, "Family name")->required();
  zoo->add_option("-p,--param", params_kv, "key=value (value parsed as JSON if possible)");
  zoo->add_option("--params", params_json, "All parameters as a JSON object");
  zoo->add_option("-o,--output", out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    std::cerr << "error: " << e.what() << "\nRun with --help for more information.\n";
    return kExitParse;
  }
  g.tol = tol;

  if (*convert) return cmd_convert(g, in, to, out, std::cout, std::cerr);
  if (*analyze) {
    const Picture p = picture == "map" ? Picture::Map
                      : picture == "dual" ? Picture::Dual
                                          : Picture::Both;
    return cmd_analyze(g, in, props, p, out, std::cout, std::cerr);
  }
  if (*complement) return cmd_complement(g, in, minimal, out, std::cout, std::cerr);
  if (*verify) return cmd_verify(g, suite, count, std::cout, std::cerr);

  json params = json::object();
  if (!params_json.empty()) {
    try {
      params = json::parse(params_json);
    } catch (const json::parse_error&) {
      std::cerr << "error: --params is not valid JSON\n";
      return kExitParse;
    }
  }
  for (const auto& kv : params_kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "error: parameter \"" << kv << "\" is not key=value\n";
      return kExitParse;
    }
    const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    params[key] = json::parse(value, nullptr, false);
    if (params[key].is_discarded()) params[key] = value;
  }
  return cmd_zoo(g, family, params, out, std::cout, std::cerr);
}
