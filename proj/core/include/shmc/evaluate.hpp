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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "shmc/classify.hpp"
#include "shmc/taxonomy.hpp"

namespace shmc {

// item id -> gold concepts at most-specific granularity.
using GoldLabeling = std::map<std::string, std::set<std::string>>;

struct SimilarityReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Hierarchical micro-averaged precision/recall/F1. Per item, both the gold
// and the predicted set are augmented with all ancestors (virtual root
// excluded); numerators and denominators are summed over the gold ids before
// dividing. Ids missing from `predictions` count as empty predictions.
// Throws DataError when a gold or predicted concept is unknown to the
// taxonomy.
SimilarityReport hierarchical_prf(
    const GoldLabeling& gold,
    const std::vector<ClassificationResult>& predictions,
    const Taxonomy& taxonomy);

// Ancestor-pair F1 between two taxonomies: A(T) = {(descendant, ancestor)}
// over all strict ancestor relations (virtual root excluded); precision and
// recall compare A(learned) against A(reference). Empty sets yield 0.
SimilarityReport taxonomy_similarity(const Taxonomy& learned,
                                     const Taxonomy& reference);

}  // namespace shmc
