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

#pragma once

#include <string>
#include <string_view>

#include "shmc/taxonomy.hpp"

namespace shmc {

// RFC 3986 percent-encoding: unreserved characters pass through, every other
// UTF-8 byte becomes %XX (uppercase hex).
std::string percent_encode(std::string_view term);

// SKOS broader triples, one per non-root edge:
//   <urn:shmc:concept:ENC(narrower)> <http://www.w3.org/2004/02/skos/core#broader> <urn:shmc:concept:ENC(broader)> .
// LF line endings, sorted by (narrower, broader). Root edges are omitted, so
// a taxonomy with no inner edges exports as an empty string.
std::string export_triples(const Taxonomy& taxonomy);

// Canonical JSON form {"concepts": [...], "edges": [[broader, narrower]...]}
// with a trailing newline. Also the on-disk format for reference taxonomies.
std::string export_taxonomy_json(const Taxonomy& taxonomy);

// Parses the export_taxonomy_json format and rebuilds the taxonomy (root
// attachment and reduction re-validated). Throws DataError on malformed
// input.
Taxonomy parse_taxonomy_json(const std::string& json_text);
Taxonomy load_taxonomy_file(const std::string& path);

}  // namespace shmc
