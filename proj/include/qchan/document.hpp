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
#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "qchan/matcore.hpp"
#include "qchan/reprs.hpp"

namespace qchan {

using json = nlohmann::json;

enum class DocKind { Kraus, Choi, Holevo, Stinespring, Zoo };

const char* to_string(DocKind k);
// Throws ParseError for unknown names.
DocKind doc_kind_from_string(const std::string& s);

// On-disk channel description. For kind == Zoo the dimensions are optional
// (0 when absent) and the payload is {"family": ..., "params": {...}}.
struct ChannelDocument {
  DocKind kind = DocKind::Kraus;
  int d_in = 0;
  int d_out = 0;
  json payload;
  std::map<std::string, std::string> metadata;

  bool operator==(const ChannelDocument&) const = default;
};

// Errors carry a location: "line L, column C" for JSON syntax, a JSON path
// such as $.payload[1][0] for schema problems.
ChannelDocument parse_document(const std::string& text);
ChannelDocument document_from_json(const json& j);
json document_to_json(const ChannelDocument& doc);
std::string serialize_document(const ChannelDocument& doc);

// FNV-1a 64 over the compact canonical serialisation.
std::uint64_t document_digest(const ChannelDocument& doc);
std::string digest_hex(std::uint64_t h);

// In-memory channel. holevo is set when the document was a Holevo form (or a
// zoo family that produces one), so analyses can keep the user's term order.
struct Channel {
  KrausRep kraus;
  std::optional<HolevoForm> holevo;
};

// Builds the channel, checking shapes (DimensionError), complete positivity
// (NotCPError) and zoo parameters (ParameterError). seed is used by random
// zoo families that do not carry their own.
Channel materialize(const ChannelDocument& doc, const Tolerance& tol,
                    std::uint64_t seed);

// Zoo families by CLI name; params is a JSON object.
Channel build_zoo(const std::string& family, const json& params,
                  const Tolerance& tol, std::uint64_t seed);

// Serialises a channel in the requested representation. Holevo output needs
// rank-one Kraus operators (given or minimal) and throws ParameterError
// otherwise; kind Zoo is rejected.
ChannelDocument make_document(const Channel& ch, DocKind kind,
                              const Tolerance& tol,
                              std::map<std::string, std::string> metadata = {});

// Two-space indented JSON in which numeric rows ([re, im] pairs, matrix rows
// of them, short vectors) stay on one line.
std::string pretty_json(const json& j);

// Value helpers shared with the report writer.
json complex_to_json(cplx z);
json matrix_to_json(const Matrix& m);

}  // namespace qchan
