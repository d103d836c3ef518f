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

#include "shmc/corpus.hpp"
#include "shmc/model.hpp"

namespace shmc {

// Assertion-level facts for a batch of items: per-item term weights computed
// with the model's frozen statistics, plus the label facts derived so far.
// Items are kept sorted by id.
struct FactBase {
  struct Item {
    std::string id;
    std::map<std::string, double> weights;  // model-vocabulary terms only
    std::set<std::string> labels;           // grows monotonically under infer
  };
  std::vector<Item> items;
};

struct InferStats {
  std::size_t rule_firings = 0;    // labels asserted directly by term rules
  std::size_t closure_rounds = 0;  // delta rounds after the rule round
};

struct ClassificationResult {
  std::string item_id;
  std::vector<std::string> all_labels;     // upward-closed, sorted, no root
  std::vector<std::string> most_specific;  // minimal elements, sorted
  friend bool operator==(const ClassificationResult&,
                         const ClassificationResult&) = default;
};

// Populates the fact base: weight[t] = tf(t, item) * idf_model(t) for every
// item token the model's vocabulary knows. Unknown tokens still count toward
// the tf denominator but carry no weight. No labels yet. Throws DataError on
// a duplicate item id.
FactBase populate(const Corpus& items, const Model& model);

// Semi-naive forward chaining to the least fixpoint of
//   R1: weight(i, t_c) >= theta_c            => hasLabel(i, c)
//   R2: hasLabel(i, c), c' broader c, not ⊤  => hasLabel(i, c')
// Each round joins only facts derived in the previous round.
InferStats infer(FactBase& facts, const Model& model);

// Minimal elements of an upward-closed label set (those with no strict
// descendant inside the set). Throws DataError if the input is not
// upward-closed w.r.t. the taxonomy.
std::set<std::string> most_specific(const std::set<std::string>& all_labels,
                                    const Taxonomy& taxonomy);

// populate + infer + most_specific for a single item.
ClassificationResult classify_item(const Document& item, const Model& model);

// Classifies a batch, fanning out per item; results sorted by item id.
// Throws DataError on duplicate item ids.
std::vector<ClassificationResult> classify_batch(
    const Corpus& items, const Model& model,
    unsigned workers = default_workers());

}  // namespace shmc
