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

#include "qchan/report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>

#include "qchan/errors.hpp"

namespace qchan {

namespace {

constexpr double kSnap = 1e-10;

json number_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (j == "inf") return std::numeric_limits<double>::infinity();
  if (j == "-inf") return -std::numeric_limits<double>::infinity();
  throw ParseError(path + ": expected a number");
}

Matrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols) {
      throw ParseError(path + ": ragged matrix");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& z = j[r][c];
      if (!z.is_array() || z.size() != 2) throw ParseError(path + ": expected [re, im]");
      m(r, c) = cplx(number_from_json(z[0], path), number_from_json(z[1], path));
    }
  }
  return m;
}

json tolerance_to_json(const Tolerance& t) {
  return {{"eps_eq", t.eps_eq}, {"eps_psd", t.eps_psd}, {"eps_rank", t.eps_rank}};
}

Tolerance tolerance_from_json(const json& j) {
  Tolerance t;
  t.eps_eq = j.at("eps_eq").get<double>();
  t.eps_psd = j.at("eps_psd").get<double>();
  t.eps_rank = j.at("eps_rank").get<double>();
  return t;
}

double snap(double x) { return std::abs(x) < kSnap ? 0.0 : x; }

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

void render_matrix(std::string& out, const Matrix& m, const char* indent) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::vector<std::string> cells;
    for (Eigen::Index c = 0; c < m.cols(); ++c) cells.push_back(format_complex(m(r, c)));
    out += fmt::format("{}[{}]\n", indent, join(cells, ", "));
  }
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  x = snap(x);
  if (x == 0.0) return "0";
  return fmt::format("{:.8g}", x);
}

std::string format_complex(cplx z) {
  const double re = snap(z.real()), im = snap(z.imag());
  if (im == 0.0) return format_number(re);
  const std::string ims = format_number(std::abs(im)) + "i";
  if (re == 0.0) return (im < 0 ? "-" : "") + ims;
  return format_number(re) + (im < 0 ? "-" : "+") + ims;
}

json certificate_to_json(const Certificate& c) {
  json w = json::object();
  json scalars = json::array();
  for (const auto& [k, v] : c.witness.scalars) scalars.push_back({k, number_to_json(v)});
  json matrices = json::array();
  for (const auto& [k, m] : c.witness.matrices) matrices.push_back({k, matrix_to_json(m)});
  json maps = json::array();
  for (const auto& [k, m] : c.witness.maps) {
    json ops = json::array();
    for (const auto& a : m.ops) ops.push_back(matrix_to_json(a));
    maps.push_back({k, {{"d_in", m.d_in}, {"d_out", m.d_out}, {"ops", ops}}});
  }
  w["scalars"] = scalars;
  w["matrices"] = matrices;
  w["maps"] = maps;
  if (c.witness.index_pair) {
    w["index_pair"] = {c.witness.index_pair->first, c.witness.index_pair->second};
  }
  return {{"property", to_string(c.property)},
          {"label", c.label},
          {"verdict", to_string(c.verdict)},
          {"provenance", c.provenance},
          {"note", c.note},
          {"tolerances", tolerance_to_json(c.tolerances)},
          {"witness", w}};
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate c;
    c.property = property_from_string(j.at("property").get<std::string>());
    c.label = j.at("label").get<std::string>();
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    c.provenance = j.at("provenance").get<std::vector<std::string>>();
    c.note = j.at("note").get<std::string>();
    c.tolerances = tolerance_from_json(j.at("tolerances"));
    const json& w = j.at("witness");
    for (const auto& s : w.at("scalars")) {
      c.witness.scalars.push_back({s.at(0).get<std::string>(),
                                   number_from_json(s.at(1), "witness.scalars")});
    }
    for (const auto& m : w.at("matrices")) {
      c.witness.matrices.push_back({m.at(0).get<std::string>(),
                                    matrix_from_json(m.at(1), "witness.matrices")});
    }
    for (const auto& m : w.at("maps")) {
      const json& body = m.at(1);
      KrausRep k{body.at("d_in").get<int>(), body.at("d_out").get<int>(), {}};
      for (const auto& op : body.at("ops")) k.ops.push_back(matrix_from_json(op, "witness.maps"));
      c.witness.maps.push_back({m.at(0).get<std::string>(), std::move(k)});
    }
    if (w.contains("index_pair")) {
      c.witness.index_pair = std::make_pair(w["index_pair"].at(0).get<int>(),
                                            w["index_pair"].at(1).get<int>());
    }
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

json report_to_json(const Report& r) {
  json certs = json::array();
  for (const auto& e : r.entries) {
    json c = certificate_to_json(e.cert);
    if (r.timing) c["wall_ms"] = e.wall_ms;
    certs.push_back(std::move(c));
  }
  return {{"tool", "qchan"},
          {"version", r.version},
          {"input", {{"digest", r.input_digest},
                     {"name", r.input_name},
                     {"kind", r.input_kind},
                     {"d_in", r.d_in},
                     {"d_out", r.d_out}}},
          {"tolerances", tolerance_to_json(r.tolerances)},
          {"seed", r.seed},
          {"timing", r.timing},
          {"certificates", certs}};
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.version = j.at("version").get<std::string>();
    const json& in = j.at("input");
    r.input_digest = in.at("digest").get<std::string>();
    r.input_name = in.at("name").get<std::string>();
    r.input_kind = in.at("kind").get<std::string>();
    r.d_in = in.at("d_in").get<int>();
    r.d_out = in.at("d_out").get<int>();
    r.tolerances = tolerance_from_json(j.at("tolerances"));
    r.seed = j.at("seed").get<std::uint64_t>();
    r.timing = j.at("timing").get<bool>();
    for (const auto& c : j.at("certificates")) {
      ReportEntry e{certificate_from_json(c), 0.0};
      if (c.contains("wall_ms")) e.wall_ms = c["wall_ms"].get<double>();
      r.entries.push_back(std::move(e));
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

bool Report::operator==(const Report& o) const {
  return report_to_json(*this) == report_to_json(o);
}

std::string render_machine(const Report& r) { return pretty_json(report_to_json(r)); }

std::string render_text(const Report& r) {
  std::string out;
  out += fmt::format("qchan {} analysis report\n", r.version);
  out += fmt::format("input: {} ({}, d_in={}, d_out={})\n",
                     r.input_name.empty() ? "<unnamed>" : r.input_name, r.input_kind,
                     r.d_in, r.d_out);
  out += fmt::format("digest: fnv1a64:{}\n", r.input_digest);
  out += fmt::format("tolerances: eq={} psd={} rank={}\n", r.tolerances.eps_eq,
                     r.tolerances.eps_psd, r.tolerances.eps_rank);
  out += fmt::format("seed: {}\n", r.seed);
  int counts[3] = {0, 0, 0};
  for (const auto& e : r.entries) {
    const Certificate& c = e.cert;
    counts[static_cast<int>(c.verdict)] += 1;
    out += "\n";
    out += fmt::format("{}{}: {}\n", to_string(c.property),
                       c.label.empty() ? "" : " [" + c.label + "]", to_string(c.verdict));
    if (!c.provenance.empty()) out += fmt::format("  criteria: {}\n", join(c.provenance, ", "));
    if (!c.note.empty()) out += fmt::format("  note: {}\n", c.note);
    for (const auto& [k, v] : c.witness.scalars) {
      out += fmt::format("  {} = {}\n", k, format_number(v));
    }
    if (c.witness.index_pair) {
      out += fmt::format("  index pair: ({}, {})\n", c.witness.index_pair->first,
                         c.witness.index_pair->second);
    }
    for (const auto& [k, m] : c.witness.matrices) {
      out += fmt::format("  matrix {} [{}x{}]:\n", k, m.rows(), m.cols());
      render_matrix(out, m, "    ");
    }
    for (const auto& [k, m] : c.witness.maps) {
      out += fmt::format("  map {} [{} -> {}, {} Kraus operators]:\n", k, m.d_in,
                         m.d_out, m.ops.size());
      for (std::size_t i = 0; i < m.ops.size(); ++i) {
        out += fmt::format("    op {}:\n", i + 1);
        render_matrix(out, m.ops[i], "      ");
      }
    }
    if (r.timing) out += fmt::format("  time: {:.3f} ms\n", e.wall_ms);
  }
  out += fmt::format("\nsummary: {} certificates, {} True, {} False, {} Indeterminate\n",
                     r.entries.size(), counts[0], counts[1], counts[2]);
  return out;
}

}  // namespace qchan
