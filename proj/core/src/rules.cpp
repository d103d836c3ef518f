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

#include "shmc/rules.hpp"

#include <cmath>

#include "shmc/errors.hpp"

namespace shmc {

double concept_threshold(const InvertedIndex& index,
                         std::string_view concept_term, double alpha) {
  if (!(alpha > 0.0)) {
    throw DataError("rule_alpha out of range");
  }
  std::uint32_t term = index.term_position(concept_term);
  auto postings = index.postings_at(term);
  if (postings.empty()) {
    throw DataError("unknown term '" + std::string(concept_term) + "'");
  }
  double term_idf = std::log(static_cast<double>(index.doc_count()) /
                             static_cast<double>(postings.size()));
  double tf_sum = 0.0;
  for (const auto& posting : postings) {
    tf_sum += static_cast<double>(posting.count) /
              static_cast<double>(index.doc_length_at(posting.doc));
  }
  double mean_tfidf = term_idf * (tf_sum / static_cast<double>(postings.size()));
  return alpha * mean_tfidf;
}

RuleSet generate_rules(const InvertedIndex& index, const Taxonomy& taxonomy,
                       double alpha, unsigned workers) {
  if (!(alpha > 0.0)) {
    throw DataError("rule_alpha out of range");
  }
  RuleSet set;
  set.alpha = alpha;
  const auto& concepts = taxonomy.concepts();
  set.rules.resize(concepts.size());
  parallel_chunks(concepts.size(), workers,
                  [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      set.rules[i] = Rule{concepts[i], concepts[i],
                          concept_threshold(index, concepts[i], alpha)};
    }
  });
  // concepts() is sorted, so the rule list already has canonical order
  return set;
}

}  // namespace shmc
