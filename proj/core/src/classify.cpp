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

#include "shmc/classify.hpp"

#include <algorithm>

#include "shmc/errors.hpp"

namespace shmc {

namespace {

std::map<std::string, double> item_weights(const Document& item,
                                           const Model& model) {
  detail::StringMap<std::uint64_t> counts;
  for (const std::string& token : item.tokens) {
    ++counts[token];
  }
  // All retained tokens feed the denominator, vocabulary or not.
  double total = static_cast<double>(item.tokens.size());
  std::map<std::string, double> weights;
  if (total == 0.0) return weights;
  for (const auto& [term, count] : counts) {
    auto idf_it = model.idf.find(term);
    if (idf_it == model.idf.end()) continue;
    weights.emplace(term, (static_cast<double>(count) / total) * idf_it->second);
  }
  return weights;
}

// Threshold per concept position, aligned with the taxonomy tables.
std::vector<double> threshold_table(const Model& model) {
  std::vector<double> thresholds(model.taxonomy.size(), 0.0);
  for (const Rule& rule : model.rules.rules) {
    auto pos = model.taxonomy.find(rule.concept_term);
    if (!pos) {
      throw DataError("rule references unknown concept '" + rule.concept_term + "'");
    }
    thresholds[*pos] = rule.threshold;
  }
  return thresholds;
}

struct ItemInference {
  std::vector<std::uint32_t> labels;  // concept positions, unsorted
  std::size_t rule_firings = 0;
  std::size_t closure_rounds = 0;
};

// Semi-naive evaluation for one item. The rule round asserts every concept
// whose evidence-term weight clears its threshold; each following round joins
// only the previous round's delta against the broader relation.
ItemInference infer_item(const std::map<std::string, double>& weights,
                         const Model& model,
                         const std::vector<double>& thresholds) {
  const Taxonomy& taxonomy = model.taxonomy;
  ItemInference result;
  std::vector<bool> labeled(taxonomy.size(), false);

  std::vector<std::uint32_t> delta;
  for (const auto& [term, weight] : weights) {
    auto pos = taxonomy.find(term);
    if (pos && weight >= thresholds[*pos]) {
      labeled[*pos] = true;
      delta.push_back(*pos);
    }
  }
  result.rule_firings = delta.size();

  std::vector<std::uint32_t> next;
  while (!delta.empty()) {
    ++result.closure_rounds;
    next.clear();
    for (std::uint32_t source : delta) {
      for (std::uint32_t parent : taxonomy.parents_of(source)) {
        if (!labeled[parent]) {
          labeled[parent] = true;
          next.push_back(parent);
        }
      }
    }
    std::swap(delta, next);
  }

  for (std::uint32_t pos = 0; pos < taxonomy.size(); ++pos) {
    if (labeled[pos]) result.labels.push_back(pos);
  }
  return result;
}

std::set<std::string> to_label_set(const std::vector<std::uint32_t>& positions,
                                   const Taxonomy& taxonomy) {
  std::set<std::string> labels;
  for (std::uint32_t pos : positions) {
    labels.insert(std::string(taxonomy.concept_at(pos)));
  }
  return labels;
}

}  // namespace

FactBase populate(const Corpus& items, const Model& model) {
  FactBase facts;
  facts.items.reserve(items.size());
  for (const Document& item : items) {
    facts.items.push_back(
        FactBase::Item{item.id, item_weights(item, model), {}});
  }
  std::sort(facts.items.begin(), facts.items.end(),
            [](const FactBase::Item& a, const FactBase::Item& b) {
              return a.id < b.id;
            });
  for (std::size_t i = 1; i < facts.items.size(); ++i) {
    if (facts.items[i - 1].id == facts.items[i].id) {
      throw DataError("duplicate item id '" + facts.items[i].id + "'");
    }
  }
  return facts;
}

InferStats infer(FactBase& facts, const Model& model) {
  std::vector<double> thresholds = threshold_table(model);
  InferStats stats;
  for (FactBase::Item& item : facts.items) {
    ItemInference inference = infer_item(item.weights, model, thresholds);
    stats.rule_firings += inference.rule_firings;
    stats.closure_rounds = std::max(stats.closure_rounds,
                                    inference.closure_rounds);
    for (std::uint32_t pos : inference.labels) {
      item.labels.insert(std::string(model.taxonomy.concept_at(pos)));
    }
  }
  return stats;
}

std::set<std::string> most_specific(const std::set<std::string>& all_labels,
                                    const Taxonomy& taxonomy) {
  std::vector<std::uint32_t> positions;
  positions.reserve(all_labels.size());
  for (const std::string& label : all_labels) {
    auto pos = taxonomy.find(label);
    if (!pos) {
      throw DataError("unknown concept '" + label + "'");
    }
    positions.push_back(*pos);
  }
  std::vector<bool> in_set(taxonomy.size(), false);
  for (std::uint32_t pos : positions) in_set[pos] = true;

  // Upward closure makes "has a strict descendant in the set" equivalent to
  // "has a child in the set", so validate and minimize in one sweep.
  std::set<std::string> minimal;
  for (std::uint32_t pos : positions) {
    for (std::uint32_t parent : taxonomy.parents_of(pos)) {
      if (!in_set[parent]) {
        throw DataError("label set is not upward-closed: missing '" +
                        std::string(taxonomy.concept_at(parent)) + "'");
      }
    }
    bool has_labeled_child = false;
    for (std::uint32_t child : taxonomy.children_of(pos)) {
      if (in_set[child]) {
        has_labeled_child = true;
        break;
      }
    }
    if (!has_labeled_child) {
      minimal.insert(std::string(taxonomy.concept_at(pos)));
    }
  }
  return minimal;
}

ClassificationResult classify_item(const Document& item, const Model& model) {
  std::vector<double> thresholds = threshold_table(model);
  ItemInference inference =
      infer_item(item_weights(item, model), model, thresholds);
  std::set<std::string> labels = to_label_set(inference.labels, model.taxonomy);
  std::set<std::string> minimal = most_specific(labels, model.taxonomy);
  return ClassificationResult{
      item.id,
      std::vector<std::string>(labels.begin(), labels.end()),
      std::vector<std::string>(minimal.begin(), minimal.end())};
}

std::vector<ClassificationResult> classify_batch(const Corpus& items,
                                                 const Model& model,
                                                 unsigned workers) {
  // Canonical output order; also surfaces duplicate ids before any work.
  std::vector<const Document*> ordered;
  ordered.reserve(items.size());
  for (const Document& item : items) ordered.push_back(&item);
  std::sort(ordered.begin(), ordered.end(),
            [](const Document* a, const Document* b) { return a->id < b->id; });
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (ordered[i - 1]->id == ordered[i]->id) {
      throw DataError("duplicate item id '" + ordered[i]->id + "'");
    }
  }

  std::vector<double> thresholds = threshold_table(model);
  std::vector<ClassificationResult> results(ordered.size());
  parallel_chunks(ordered.size(), workers,
                  [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Document& item = *ordered[i];
      ItemInference inference =
          infer_item(item_weights(item, model), model, thresholds);
      std::set<std::string> labels =
          to_label_set(inference.labels, model.taxonomy);
      std::set<std::string> minimal = most_specific(labels, model.taxonomy);
      results[i] = ClassificationResult{
          item.id,
          std::vector<std::string>(labels.begin(), labels.end()),
          std::vector<std::string>(minimal.begin(), minimal.end())};
    }
  });
  return results;
}

}  // namespace shmc
