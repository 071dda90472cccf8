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

#include "qchan/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qchan/complement.hpp"
#include "qchan/errors.hpp"
#include "qchan/random.hpp"
#include "qchan/suites.hpp"

namespace qchan {

namespace {

void write_output(const std::string& path, const std::string& text, std::ostream& os) {
  if (path.empty() || path == "-") {
    os << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw ParseError("failed writing " + path);
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

ChannelDocument load(const std::string& in) { return parse_document(read_input(in)); }

double scale_of(const Matrix& m) { return std::max(1.0, m.norm()); }

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const DimensionError*>(&e)) return kExitDimension;
  if (dynamic_cast<const NotCPError*>(&e)) return kExitNotCP;
  if (dynamic_cast<const ParameterError*>(&e)) return kExitParameter;
  if (dynamic_cast<const PreconditionError*>(&e)) return kExitParameter;
  return kExitInternal;
}

Tolerance tolerance_from_env(Tolerance base) {
  const char* v = std::getenv("QCHAN_TOL_EQ");
  if (!v || !*v) return base;
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    base.eps_eq = x;
  } catch (const std::logic_error&) {
    throw ParameterError(std::string("QCHAN_TOL_EQ is not a number: ") + v);
  }
  return base;
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read " + path);
  ss << f.rdbuf();
  return ss.str();
}

int cmd_convert(const GlobalOptions& g, const std::string& in, const std::string& to,
                const std::string& out, std::ostream& os, std::ostream& err) {
  return guarded(err, [&] {
    g.tol.validate();
    const DocKind kind = doc_kind_from_string(to);
    const ChannelDocument doc = load(in);
    const Channel ch = materialize(doc, g.tol, g.seed);
    auto md = doc.metadata;
    md["converted_from"] = to_string(doc.kind);
    md["source_digest"] = digest_hex(document_digest(doc));
    const ChannelDocument result = make_document(ch, kind, g.tol, md);
    // The written document must describe the same map.
    const Channel back = materialize(result, g.tol, g.seed);
    const Matrix c0 = choi_from_kraus(ch.kraus).mat;
    if ((choi_from_kraus(back.kraus).mat - c0).norm() > g.tol.eps_eq * scale_of(c0)) {
      throw InvariantViolation("conversion does not round-trip within eps_eq");
    }
    write_output(out, serialize_document(result), os);
    return static_cast<int>(kExitOk);
  });
}

int cmd_analyze(const GlobalOptions& g, const std::string& in,
                const std::vector<std::string>& properties, Picture picture,
                const std::string& out, std::ostream& os, std::ostream& err) {
  return guarded(err, [&] {
    AnalyzeOptions opt;
    opt.tol = g.tol;
    opt.seed = g.seed;
    opt.properties = properties;
    opt.picture = picture;
    opt.timing = g.timing;
    const AnalysisResult res = analyze_document(load(in), opt);
    write_output(out, g.machine ? render_machine(res.report) : render_text(res.report), os);
    if (!res.consistent) {
      err << "error: internal invariant violated: " << res.inconsistency << "\n";
      return static_cast<int>(kExitInternal);
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_complement(const GlobalOptions& g, const std::string& in, bool minimal,
                   const std::string& out, std::ostream& os, std::ostream& err) {
  return guarded(err, [&] {
    g.tol.validate();
    const ChannelDocument doc = load(in);
    const Channel ch = materialize(doc, g.tol, g.seed);
    Channel comp;
    comp.kraus = minimal ? minimal_complement(ch.kraus, g.tol) : complement_from_kraus(ch.kraus);
    auto md = doc.metadata;
    md["complement_of"] = digest_hex(document_digest(doc));
    md["provenance"] = minimal ? "complement of the minimal Kraus family, T -> sum_ij tr(A_i T A_j^*) E_ij"
                               : "complement of the given Kraus family, T -> sum_ij tr(A_i T A_j^*) E_ij";
    if (md.count("name")) md["name"] = md["name"] + " (complement)";
    write_output(out, serialize_document(make_document(comp, DocKind::Kraus, g.tol, md)), os);
    return static_cast<int>(kExitOk);
  });
}

int cmd_verify(const GlobalOptions& g, const std::string& suite, int n,
               std::ostream& os, std::ostream& err) {
  return guarded(err, [&] {
    const SuiteResult r = run_suite(suite, n, g.seed, g.tol);
    os << (g.machine ? pretty_json(suite_to_json(r)) : render_suite_text(r));
    if (!r.ok()) {
      err << "error: " << r.failures.size() << " equivalence violation(s) in " << suite << "\n";
      return static_cast<int>(kExitInternal);
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_zoo(const GlobalOptions& g, const std::string& family, const json& params,
            const std::string& out, std::ostream& os, std::ostream& err) {
  return guarded(err, [&] {
    g.tol.validate();
    const Channel ch = build_zoo(family, params, g.tol, g.seed);
    std::map<std::string, std::string> md;
    md["name"] = family;
    md["family"] = family;
    md["params"] = params.dump();
    if (family.rfind("random-", 0) == 0) {
      md["prng"] = kPrngName;
      md["seed"] = params.contains("seed") ? params["seed"].dump() : std::to_string(g.seed);
    }
    const DocKind kind = ch.holevo ? DocKind::Holevo : DocKind::Kraus;
    write_output(out, serialize_document(make_document(ch, kind, g.tol, md)), os);
    return static_cast<int>(kExitOk);
  });
}

}  // namespace qchan
