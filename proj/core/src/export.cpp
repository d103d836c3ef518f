// Copyright 2026 The shmc Authors
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

#include "shmc/export.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "shmc/errors.hpp"

namespace shmc {

namespace {

using nlohmann::json;

constexpr std::string_view kBroaderPredicate =
    "<http://www.w3.org/2004/02/skos/core#broader>";
constexpr std::string_view kConceptUrnPrefix = "urn:shmc:concept:";

bool is_unreserved(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '-' || c == '.' || c == '_' || c == '~';
}

}  // namespace

std::string percent_encode(std::string_view term) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string encoded;
  encoded.reserve(term.size());
  for (unsigned char c : term) {
    if (is_unreserved(c)) {
      encoded.push_back(static_cast<char>(c));
    } else {
      encoded.push_back('%');
      encoded.push_back(kHex[c >> 4]);
      encoded.push_back(kHex[c & 0x0f]);
    }
  }
  return encoded;
}

std::string export_triples(const Taxonomy& taxonomy) {
  std::vector<TaxonomyEdge> edges = taxonomy.edges();
  std::sort(edges.begin(), edges.end(),
            [](const TaxonomyEdge& a, const TaxonomyEdge& b) {
              return std::tie(a.narrower, a.broader) <
                     std::tie(b.narrower, b.broader);
            });
  std::ostringstream out;
  for (const TaxonomyEdge& edge : edges) {
    out << '<' << kConceptUrnPrefix << percent_encode(edge.narrower) << "> "
        << kBroaderPredicate << " <" << kConceptUrnPrefix
        << percent_encode(edge.broader) << "> .\n";
  }
  return out.str();
}

std::string export_taxonomy_json(const Taxonomy& taxonomy) {
  json doc;
  doc["concepts"] = taxonomy.concepts();
  json edges = json::array();
  for (const TaxonomyEdge& edge : taxonomy.edges()) {
    edges.push_back(json::array({edge.broader, edge.narrower}));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

Taxonomy parse_taxonomy_json(const std::string& json_text) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw DataError("taxonomy file is not a JSON object");
  }
  if (!doc.contains("concepts") || !doc["concepts"].is_array()) {
    throw DataError("taxonomy file missing 'concepts' array");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw DataError("taxonomy file missing 'edges' array");
  }
  std::vector<std::string> concepts;
  for (const auto& value : doc["concepts"]) {
    if (!value.is_string()) throw DataError("non-string concept in taxonomy file");
    concepts.push_back(value.get<std::string>());
  }
  std::vector<TaxonomyEdge> edges;
  for (const auto& value : doc["edges"]) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_string() ||
        !value[1].is_string()) {
      throw DataError("malformed edge in taxonomy file");
    }
    edges.push_back(
        TaxonomyEdge{value[0].get<std::string>(), value[1].get<std::string>()});
  }
  try {
    return build_taxonomy(std::move(edges), std::move(concepts));
  } catch (const std::logic_error& e) {
    // A hand-written reference file can contain what learned output cannot.
    throw DataError(std::string("invalid taxonomy file: ") + e.what());
  }
}

Taxonomy load_taxonomy_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open taxonomy file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_taxonomy_json(buffer.str());
}

}  // namespace shmc
