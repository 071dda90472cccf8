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

#include "qchan/document.hpp"

#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "qchan/errors.hpp"
#include "qchan/zoo.hpp"

namespace qchan {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(path, "missing field \"" + key + "\"");
  return *it;
}

int read_int(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (std::floor(x) == x && std::abs(x) < 1e9) return static_cast<int>(x);
  }
  parse_fail(path, "expected an integer");
}

cplx read_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  parse_fail(path, "expected a complex number [re, im]");
}

// rows/cols < 0 means "any".
Matrix read_matrix(const json& j, const std::string& path, int rows = -1,
                   int cols = -1) {
  if (!j.is_array() || j.empty()) parse_fail(path, "expected a non-empty array of rows");
  const std::size_t n = j.size();
  std::size_t m = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].empty()) parse_fail(rp, "expected a non-empty row");
    if (r == 0) m = j[r].size();
    if (j[r].size() != m) parse_fail(rp, "rows have different lengths");
  }
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      out(r, c) = read_complex(j[r][c], path + "[" + std::to_string(r) + "][" +
                                            std::to_string(c) + "]");
    }
  }
  if ((rows >= 0 && out.rows() != rows) || (cols >= 0 && out.cols() != cols)) {
    throw DimensionError(path + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " +
                         std::to_string(out.rows()) + "x" +
                         std::to_string(out.cols()));
  }
  return out;
}

Vector read_vector(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) parse_fail(path, "expected a non-empty vector");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(i) = read_complex(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

// Accepts a number, or a string holding a decimal or a fraction "p/q".
double read_real_param(const json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) parse_fail(path, "expected a number or a fraction string");
  const std::string s = j.get<std::string>();
  try {
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double x = std::stod(s, &used);
      if (used != s.size()) parse_fail(path, "malformed number \"" + s + "\"");
      return x;
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    std::size_t u1 = 0, u2 = 0;
    const double p = std::stod(num, &u1), q = std::stod(den, &u2);
    if (u1 != num.size() || u2 != den.size()) parse_fail(path, "malformed fraction \"" + s + "\"");
    if (q == 0.0) throw ParameterError(path + ": zero denominator");
    return p / q;
  } catch (const std::invalid_argument&) {
    parse_fail(path, "malformed number \"" + s + "\"");
  } catch (const std::out_of_range&) {
    parse_fail(path, "number out of range \"" + s + "\"");
  }
}

class Params {
 public:
  Params(const json& p, std::string path) : p_(p), path_(std::move(path)) {
    if (!p_.is_object()) parse_fail(path_, "params must be an object");
  }
  bool has(const std::string& k) const { return p_.contains(k); }
  const json& get(const std::string& k) {
    seen_.insert(k);
    if (!p_.contains(k)) throw ParameterError(at(k) + ": missing parameter");
    return p_.at(k);
  }
  int integer(const std::string& k) { return read_int(get(k), at(k)); }
  int integer(const std::string& k, int fallback) {
    return has(k) ? integer(k) : fallback;
  }
  double real(const std::string& k) { return read_real_param(get(k), at(k)); }
  Matrix matrix(const std::string& k) { return read_matrix(get(k), at(k)); }
  std::uint64_t seed(std::uint64_t fallback) {
    if (!has(k_seed)) return fallback;
    const json& j = get(k_seed);
    if (!j.is_number_unsigned() && !j.is_number_integer()) parse_fail(at(k_seed), "expected a non-negative integer");
    if (j.is_number_integer() && j.get<std::int64_t>() < 0) parse_fail(at(k_seed), "expected a non-negative integer");
    return j.get<std::uint64_t>();
  }
  std::string at(const std::string& k) const { return path_ + "." + k; }
  void finish() const {
    for (auto it = p_.begin(); it != p_.end(); ++it) {
      if (!seen_.count(it.key())) {
        throw ParameterError(at(it.key()) + ": unknown parameter for this family");
      }
    }
  }

 private:
  static constexpr const char* k_seed = "seed";
  const json& p_;
  std::string path_;
  std::set<std::string> seen_;
};

void positive(int v, const std::string& path) {
  if (v < 1) throw ParameterError(path + ": must be positive");
}

}  // namespace

const char* to_string(DocKind k) {
  switch (k) {
    case DocKind::Kraus: return "kraus";
    case DocKind::Choi: return "choi";
    case DocKind::Holevo: return "holevo";
    case DocKind::Stinespring: return "stinespring";
    case DocKind::Zoo: return "zoo";
  }
  return "?";
}

DocKind doc_kind_from_string(const std::string& s) {
  for (DocKind k : {DocKind::Kraus, DocKind::Choi, DocKind::Holevo,
                    DocKind::Stinespring, DocKind::Zoo}) {
    if (s == to_string(k)) return k;
  }
  throw ParseError("unknown representation kind \"" + s + "\"");
}

ChannelDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the failure; translate to line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": malformed JSON");
  }
  return document_from_json(j);
}

ChannelDocument document_from_json(const json& j) {
  if (!j.is_object()) parse_fail("$", "document must be a JSON object");
  static const std::set<std::string> known = {"kind", "d_in", "d_out", "payload",
                                              "metadata"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) parse_fail("$." + it.key(), "unknown field");
  }
  ChannelDocument doc;
  const json& kind = field(j, "kind", "$");
  if (!kind.is_string()) parse_fail("$.kind", "expected a string");
  try {
    doc.kind = doc_kind_from_string(kind.get<std::string>());
  } catch (const ParseError& e) {
    parse_fail("$.kind", e.what());
  }
  const bool dims_optional = doc.kind == DocKind::Zoo;
  for (auto [key, dst] : {std::pair{"d_in", &doc.d_in}, std::pair{"d_out", &doc.d_out}}) {
    const std::string path = std::string("$.") + key;
    if (!j.contains(key)) {
      if (dims_optional) continue;
      parse_fail("$", std::string("missing field \"") + key + "\"");
    }
    *dst = read_int(j.at(key), path);
    if (*dst < 1) throw DimensionError(path + ": dimension must be positive");
  }
  doc.payload = field(j, "payload", "$");
  if (j.contains("metadata")) {
    const json& md = j.at("metadata");
    if (!md.is_object()) parse_fail("$.metadata", "expected an object");
    for (auto it = md.begin(); it != md.end(); ++it) {
      if (!it.value().is_string()) {
        parse_fail("$.metadata." + it.key(), "metadata values must be strings");
      }
      doc.metadata[it.key()] = it.value().get<std::string>();
    }
  }
  return doc;
}

json document_to_json(const ChannelDocument& doc) {
  json j;
  j["kind"] = to_string(doc.kind);
  if (doc.d_in > 0) j["d_in"] = doc.d_in;
  if (doc.d_out > 0) j["d_out"] = doc.d_out;
  j["payload"] = doc.payload;
  j["metadata"] = json::object();
  for (const auto& [k, v] : doc.metadata) j["metadata"][k] = v;
  return j;
}

namespace {

bool is_flat(const json& j, int depth) {
  if (!j.is_array()) return !j.is_object();
  if (depth == 0) return false;
  for (const auto& x : j) {
    if (!is_flat(x, depth - 1)) return false;
  }
  return true;
}

std::string compact(const json& j) {
  if (!j.is_array()) return j.dump();
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += compact(j[i]);
  }
  return out + "]";
}

void pretty_into(std::string& out, const json& j, int indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + json(it.key()).dump() + ": ";
      pretty_into(out, it.value(), indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j, 2)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      pretty_into(out, j[i], indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else {
    out += compact(j);
  }
}

}  // namespace

std::string pretty_json(const json& j) {
  std::string out;
  pretty_into(out, j, 0);
  return out + "\n";
}

std::string serialize_document(const ChannelDocument& doc) {
  return pretty_json(document_to_json(doc));
}

std::uint64_t document_digest(const ChannelDocument& doc) {
  const std::string canon = document_to_json(doc).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(std::uint64_t h) {
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = hex[h & 0xf];
  return s;
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Channel build_zoo(const std::string& family, const json& params,
                  const Tolerance& tol, std::uint64_t seed) {
  Params p(params, "$.payload.params");
  Channel ch;
  if (family == "schur") {
    ch.kraus = schur_map(p.matrix("a"), tol);
  } else if (family == "schur-complement") {
    const Matrix a = p.matrix("a");
    ch.kraus = schur_complement_map(a, tol);
    ch.holevo = schur_complement_holevo(a, tol);
  } else if (family == "werner-holevo") {
    const int d = p.integer("d");
    const double lambda = p.real("lambda");
    WernerRange range = WernerRange::EntanglementBreaking;
    if (p.has("range")) {
      const json& r = p.get("range");
      if (r == "eb") {
        range = WernerRange::EntanglementBreaking;
      } else if (r == "cp") {
        range = WernerRange::CompletelyPositive;
      } else {
        throw ParameterError(p.at("range") + ": expected \"eb\" or \"cp\"");
      }
    }
    ch.kraus = werner_holevo(d, lambda, range, tol);
  } else if (family == "phi-lambda") {
    const int d = p.integer("d");
    ch.kraus = phi_lambda(d, p.real("lambda"), tol);
  } else if (family == "pinching") {
    const int d = p.integer("d");
    positive(d, p.at("d"));
    ch.kraus = pinching(d);
  } else if (family == "ad-operator") {
    ch.kraus = ad_operator(p.matrix("a"));
  } else if (family == "direct-sum-pure") {
    const json& blocks = p.get("blocks");
    if (!blocks.is_array() || blocks.empty()) {
      parse_fail(p.at("blocks"), "expected a non-empty array of matrices");
    }
    std::vector<Matrix> vs;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      vs.push_back(read_matrix(blocks[i], p.at("blocks") + "[" + std::to_string(i) + "]"));
    }
    ch.kraus = direct_sum_pure(vs).channel;
  } else if (family == "cstar-extreme-gen") {
    std::vector<Vector> us, vs;
    for (const char* key : {"u", "v"}) {
      const json& arr = p.get(key);
      if (!arr.is_array() || arr.empty()) parse_fail(p.at(key), "expected a non-empty array of vectors");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        (key[0] == 'u' ? us : vs)
            .push_back(read_vector(arr[i], p.at(key) + "[" + std::to_string(i) + "]"));
      }
    }
    ch.kraus = cstar_extreme_gen(us, vs, tol);
  } else if (family == "random-channel") {
    const int di = p.integer("d_in"), dout = p.integer("d_out");
    const int cr = p.integer("choi_rank", di * dout);
    ch.kraus = random_channel(di, dout, cr, p.seed(seed));
  } else if (family == "random-degradable-seb" || family == "random-seb-violator") {
    const int di = p.integer("d_in"), dout = p.integer("d_out");
    const int classes = p.integer("classes", std::min(2, dout));
    const std::uint64_t s = p.seed(seed);
    ch.holevo = family == "random-degradable-seb"
                    ? random_degradable_seb(di, dout, classes, s)
                    : random_seb_violator(di, dout, classes, s);
    ch.kraus = holevo_to_kraus(*ch.holevo, tol);
  } else {
    throw ParameterError("$.payload.family: unknown zoo family \"" + family + "\"");
  }
  p.finish();
  return ch;
}

Channel materialize(const ChannelDocument& doc, const Tolerance& tol,
                    std::uint64_t seed) {
  const json& pl = doc.payload;
  Channel ch;
  switch (doc.kind) {
    case DocKind::Kraus: {
      if (!pl.is_array() || pl.empty()) {
        parse_fail("$.payload", "expected a non-empty array of Kraus matrices");
      }
      std::vector<Matrix> ops;
      for (std::size_t i = 0; i < pl.size(); ++i) {
        ops.push_back(read_matrix(pl[i], "$.payload[" + std::to_string(i) + "]",
                                  doc.d_out, doc.d_in));
      }
      ch.kraus = make_kraus(doc.d_in, doc.d_out, std::move(ops));
      break;
    }
    case DocKind::Choi: {
      const int n = doc.d_in * doc.d_out;
      ch.kraus = kraus_from_choi(
          make_choi(doc.d_in, doc.d_out, read_matrix(pl, "$.payload", n, n)), tol);
      break;
    }
    case DocKind::Holevo: {
      if (!pl.is_array() || pl.empty()) {
        parse_fail("$.payload", "expected a non-empty array of {F, R} pairs");
      }
      HolevoForm h{doc.d_in, doc.d_out, {}};
      for (std::size_t i = 0; i < pl.size(); ++i) {
        const std::string at = "$.payload[" + std::to_string(i) + "]";
        if (!pl[i].is_object()) parse_fail(at, "expected an object with F and R");
        h.pairs.push_back({read_matrix(field(pl[i], "F", at), at + ".F", doc.d_in, doc.d_in),
                           read_matrix(field(pl[i], "R", at), at + ".R", doc.d_out, doc.d_out)});
      }
      validate(h, tol);
      ch.kraus = holevo_to_kraus(h, tol);
      ch.holevo = std::move(h);
      break;
    }
    case DocKind::Stinespring: {
      if (!pl.is_object()) parse_fail("$.payload", "expected {env_dim, a}");
      const int env = read_int(field(pl, "env_dim", "$.payload"), "$.payload.env_dim");
      if (env < 1) throw DimensionError("$.payload.env_dim: must be positive");
      const Matrix a = read_matrix(field(pl, "a", "$.payload"), "$.payload.a",
                                   doc.d_out * env, doc.d_in);
      ch.kraus = kraus_from_stinespring(StinespringRep{doc.d_in, doc.d_out, env, a});
      if (ch.kraus.ops.empty()) throw ParameterError("$.payload.a: zero map");
      ch.kraus = make_kraus(ch.kraus.d_in, ch.kraus.d_out, ch.kraus.ops);
      break;
    }
    case DocKind::Zoo: {
      if (!pl.is_object()) parse_fail("$.payload", "expected {family, params}");
      const json& fam = field(pl, "family", "$.payload");
      if (!fam.is_string()) parse_fail("$.payload.family", "expected a string");
      for (auto it = pl.begin(); it != pl.end(); ++it) {
        if (it.key() != "family" && it.key() != "params") {
          parse_fail("$.payload." + it.key(), "unknown field");
        }
      }
      const json params = pl.contains("params") ? pl.at("params") : json::object();
      ch = build_zoo(fam.get<std::string>(), params, tol, seed);
      if ((doc.d_in > 0 && doc.d_in != ch.kraus.d_in) ||
          (doc.d_out > 0 && doc.d_out != ch.kraus.d_out)) {
        throw DimensionError("$: declared dimensions do not match the generated channel");
      }
      break;
    }
  }
  return ch;
}

ChannelDocument make_document(const Channel& ch, DocKind kind,
                              const Tolerance& tol,
                              std::map<std::string, std::string> metadata) {
  ChannelDocument doc;
  doc.kind = kind;
  doc.d_in = ch.kraus.d_in;
  doc.d_out = ch.kraus.d_out;
  doc.metadata = std::move(metadata);
  switch (kind) {
    case DocKind::Kraus:
      doc.payload = json::array();
      for (const auto& a : ch.kraus.ops) doc.payload.push_back(matrix_to_json(a));
      break;
    case DocKind::Choi:
      doc.payload = matrix_to_json(choi_from_kraus(ch.kraus).mat);
      break;
    case DocKind::Stinespring: {
      const StinespringRep s = stinespring_from_kraus(ch.kraus);
      doc.payload = {{"env_dim", s.env_dim}, {"a", matrix_to_json(s.a)}};
      break;
    }
    case DocKind::Holevo: {
      HolevoForm h;
      if (ch.holevo) {
        h = *ch.holevo;
      } else if (!rank_one_terms(ch.kraus, tol).empty()) {
        h = holevo_from_rank_one(ch.kraus, tol);
      } else {
        const KrausRep minimal = kraus_from_choi(choi_from_kraus(ch.kraus), tol);
        if (rank_one_terms(minimal, tol).empty()) {
          throw ParameterError(
              "no rank-one Kraus representation found (given or minimal); "
              "Holevo output is not available");
        }
        h = holevo_from_rank_one(minimal, tol);
      }
      doc.payload = json::array();
      for (const auto& p : h.pairs) {
        doc.payload.push_back({{"F", matrix_to_json(p.F)}, {"R", matrix_to_json(p.R)}});
      }
      break;
    }
    case DocKind::Zoo:
      throw ParameterError("cannot convert to a zoo document");
  }
  return doc;
}

}  // namespace qchan
