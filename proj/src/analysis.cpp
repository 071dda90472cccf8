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

#include "qchan/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "qchan/complement.hpp"
#include "qchan/errors.hpp"
#include "qchan/structure.hpp"
#include "qchan/zoo.hpp"

namespace qchan {

namespace {

bool all_effects_rank_one(const HolevoForm& h, const Tolerance& tol) {
  for (const auto& p : h.pairs) {
    if (rank_tol(p.F, tol) != 1) return false;
  }
  return true;
}

Certificate degradable_from_holevo(const HolevoForm& h, const Tolerance& tol) {
  Certificate c = degradable_seb_test(h, tol);
  if (c.is_true()) {
    const Matrix* w = c.witness.matrix("self_complement_isometry");
    c.witness.maps.push_back({"degrading_map", ad_operator(w->adjoint())});
  }
  return c;
}

Certificate choi_projection_direct(const KrausRep& k, const std::string& why,
                                   const Tolerance& tol) {
  Certificate c;
  c.property = Property::ChoiProjection;
  c.tolerances = tol;
  c.provenance = {"idempotent-choi"};
  const Matrix m = choi_from_kraus(k).mat;
  const double res = (m * m - m).norm();
  c.witness.scalars.push_back({"idempotence_residual", res});
  c.verdict = res <= tol.eps_eq ? Verdict::True : Verdict::False;
  c.note = "equivalent characterisations not applicable: " + why;
  return c;
}

}  // namespace

const std::vector<std::string>& analysis_property_names() {
  static const std::vector<std::string> names = {
      "ppt",  "eb",   "seb", "degradable", "antidegradable", "selfcomplementary",
      "cstar", "choiprojection"};
  return names;
}

AnalysisResult analyze_document(const ChannelDocument& doc,
                                const AnalyzeOptions& opt) {
  opt.tol.validate();
  const auto& names = analysis_property_names();
  for (const auto& p : opt.properties) {
    if (std::find(names.begin(), names.end(), p) == names.end()) {
      throw ParameterError("unknown property \"" + p + "\"");
    }
  }
  auto wanted = [&](const std::string& p) {
    return opt.properties.empty() ||
           std::find(opt.properties.begin(), opt.properties.end(), p) !=
               opt.properties.end();
  };

  const Tolerance& tol = opt.tol;
  const Channel ch = materialize(doc, tol, opt.seed);
  const KrausRep& k = ch.kraus;
  std::optional<HolevoForm> h = ch.holevo;
  if (!h && !rank_one_terms(k, tol).empty()) h = holevo_from_rank_one(k, tol);
  const bool rank_one_holevo = h && all_effects_rank_one(*h, tol);

  AnalysisResult res;
  Report& r = res.report;
  r.version = kVersion;
  r.input_digest = digest_hex(document_digest(doc));
  auto name = doc.metadata.find("name");
  r.input_name = name == doc.metadata.end() ? "" : name->second;
  r.input_kind = to_string(doc.kind);
  if (doc.kind == DocKind::Zoo) r.input_kind += ":" + doc.payload.at("family").get<std::string>();
  r.d_in = k.d_in;
  r.d_out = k.d_out;
  r.tolerances = tol;
  r.seed = opt.seed;
  r.timing = opt.timing;

  auto run = [&](const std::function<std::vector<Certificate>()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Certificate> certs = f();
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    for (auto& c : certs) r.entries.push_back({std::move(c), ms / certs.size()});
  };

  if (wanted("ppt")) run([&] { return std::vector{is_ppt(k, tol)}; });
  if (wanted("eb")) {
    run([&] { return std::vector{ch.holevo ? eb_certificate(*ch.holevo, tol) : eb_certificate(k, tol)}; });
  }
  if (wanted("seb")) {
    run([&] {
      Certificate c;
      if (ch.holevo) {
        c = eb_certificate(*ch.holevo, tol);
        c.property = Property::SEB;
        c.provenance.push_back("finite-dimension: SEB equals EB");
      } else {
        c = seb_certificate(k, tol);
      }
      return std::vector{c};
    });
  }
  if (wanted("degradable")) {
    run([&] {
      return std::vector{rank_one_holevo ? degradable_from_holevo(*h, tol)
                                         : degradability_via_inverse(k, tol)};
    });
  }
  if (wanted("antidegradable")) {
    run([&] {
      return std::vector{h ? antidegradable_test(*h, tol) : antidegradable_test(k, tol)};
    });
  }
  if (wanted("selfcomplementary")) {
    run([&] { return std::vector{is_self_complementary(k, tol)}; });
  }
  if (wanted("cstar")) {
    if (opt.picture != Picture::Dual) {
      run([&] {
        Certificate c = cstar_extreme_test(k, tol);
        c.label = "map";
        return std::vector{c};
      });
    }
    if (opt.picture != Picture::Map) {
      run([&] {
        Certificate c = cstar_extreme_test(dual(k), tol);
        c.label = "dual";
        return std::vector{c};
      });
    }
  }
  if (wanted("choiprojection")) {
    run([&] {
      const std::string why = choi_projection_precondition(k, tol);
      if (!why.empty()) return std::vector{choi_projection_direct(k, why, tol)};
      const ChoiProjectionBundle b = choi_projection_equivalences(k, tol);
      Certificate head = b.conditions.front();
      head.label.clear();
      head.provenance.push_back("equivalence-bundle");
      head.note = b.consistent ? "all equivalent characterisations agree"
                               : "equivalent characterisations disagree";
      if (!b.consistent) {
        res.consistent = false;
        res.inconsistency = "ChoiProjection characterisations disagree";
      }
      std::vector<Certificate> out{head};
      for (const auto& c : b.conditions) {
        Certificate sub = c;
        sub.label = "equivalent: " + c.label;
        out.push_back(std::move(sub));
      }
      return out;
    });
  }
  return res;
}

}  // namespace qchan
