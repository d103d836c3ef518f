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
#include <vector>

#include "shmc/index.hpp"
#include "shmc/taxonomy.hpp"

namespace shmc {

// A single-body-atom Horn clause: weight(item, evidence_term) >= threshold
// implies hasLabel(item, concept). One per non-root concept; evidence_term is
// the concept's own term.
struct Rule {
  std::string concept_term;
  std::string evidence_term;
  double threshold = 0.0;
  friend bool operator==(const Rule&, const Rule&) = default;
};

struct RuleSet {
  std::vector<Rule> rules;  // sorted by concept
  double alpha = 0.5;       // recorded for provenance
  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

// Per-concept threshold: alpha times the mean TF-IDF weight of the concept's
// term over the documents that contain it. Throws DataError for an unknown
// term or alpha <= 0.
double concept_threshold(const InvertedIndex& index,
                         std::string_view concept_term, double alpha);

// One rule per non-root taxonomy concept, in lexicographic concept order.
RuleSet generate_rules(const InvertedIndex& index, const Taxonomy& taxonomy,
                       double alpha, unsigned workers = default_workers());

}  // namespace shmc
