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

#include "shmc/model.hpp"

#include <charconv>
#include <cmath>

#include "shmc/errors.hpp"

namespace shmc {

double round6(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                 std::chars_format::fixed, 6);
  double result = 0.0;
  std::from_chars(buffer, end, result);
  return result;
}

double Model::idf_of(std::string_view term) const {
  auto it = idf.find(term);
  if (it == idf.end()) {
    throw DataError("unknown term '" + std::string(term) + "'");
  }
  return it->second;
}

Model Model::freeze(const InvertedIndex& index, Taxonomy taxonomy,
                    RuleSet rules, PipelineConfig config) {
  Model model;
  model.n_docs = index.doc_count();
  double n = static_cast<double>(index.doc_count());
  for (std::uint32_t t = 0; t < index.vocab_size(); ++t) {
    std::string term(index.term_at(t));
    std::size_t df = index.postings_at(t).size();
    model.df.emplace(term, df);
    model.idf.emplace(std::move(term),
                      round6(std::log(n / static_cast<double>(df))));
  }
  for (Rule& rule : rules.rules) {
    rule.threshold = round6(rule.threshold);
  }
  model.taxonomy = std::move(taxonomy);
  model.rules = std::move(rules);
  model.config = std::move(config);
  return model;
}

Model learn_model(const InvertedIndex& index, const PipelineConfig& config,
                  unsigned workers) {
  validate_config(config);
  HierarchizeParams params{config.min_df, config.max_df_frac,
                           config.subsumption_threshold};
  Taxonomy taxonomy = induce_taxonomy(index, params, workers);
  RuleSet rules = generate_rules(index, taxonomy, config.rule_alpha, workers);
  return Model::freeze(index, std::move(taxonomy), std::move(rules), config);
}

}  // namespace shmc
