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

#include "shmc/evaluate.hpp"

#include <algorithm>

#include "shmc/errors.hpp"

namespace shmc {

namespace {

double harmonic_f1(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

// The set plus all strict ancestors of its members, root excluded.
std::set<std::string> ancestor_augment(const std::set<std::string>& labels,
                                       const Taxonomy& taxonomy,
                                       const char* origin) {
  std::set<std::string> augmented;
  for (const std::string& label : labels) {
    if (!taxonomy.contains(label)) {
      throw DataError(std::string(origin) + " references unknown concept '" +
                      label + "'");
    }
    augmented.insert(label);
    for (std::string& ancestor : taxonomy.ancestors(label)) {
      augmented.insert(std::move(ancestor));
    }
  }
  return augmented;
}

std::size_t intersection_size(const std::set<std::string>& a,
                              const std::set<std::string>& b) {
  std::size_t shared = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) {
      ++shared;
      ++i;
      ++j;
    } else if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return shared;
}

// All (descendant, ancestor) pairs entailed by the taxonomy order.
std::set<std::pair<std::string, std::string>> ancestor_pairs(
    const Taxonomy& taxonomy) {
  std::set<std::pair<std::string, std::string>> pairs;
  for (const std::string& concept_term : taxonomy.concepts()) {
    for (const std::string& ancestor : taxonomy.ancestors(concept_term)) {
      pairs.emplace(concept_term, ancestor);
    }
  }
  return pairs;
}

}  // namespace

SimilarityReport hierarchical_prf(
    const GoldLabeling& gold,
    const std::vector<ClassificationResult>& predictions,
    const Taxonomy& taxonomy) {
  std::map<std::string, std::set<std::string>> predicted;
  for (const ClassificationResult& result : predictions) {
    predicted[result.item_id] = std::set<std::string>(
        result.all_labels.begin(), result.all_labels.end());
  }

  std::size_t shared_total = 0;
  std::size_t pred_total = 0;
  std::size_t gold_total = 0;
  for (const auto& [item_id, gold_labels] : gold) {
    std::set<std::string> gold_aug =
        ancestor_augment(gold_labels, taxonomy, "gold");
    std::set<std::string> pred_aug;
    auto it = predicted.find(item_id);
    if (it != predicted.end()) {
      pred_aug = ancestor_augment(it->second, taxonomy, "prediction");
    }
    shared_total += intersection_size(gold_aug, pred_aug);
    pred_total += pred_aug.size();
    gold_total += gold_aug.size();
  }

  SimilarityReport report;
  report.precision = pred_total == 0
                         ? 0.0
                         : static_cast<double>(shared_total) /
                               static_cast<double>(pred_total);
  report.recall = gold_total == 0
                      ? 0.0
                      : static_cast<double>(shared_total) /
                            static_cast<double>(gold_total);
  report.f1 = harmonic_f1(report.precision, report.recall);
  return report;
}

SimilarityReport taxonomy_similarity(const Taxonomy& learned,
                                     const Taxonomy& reference) {
  auto learned_pairs = ancestor_pairs(learned);
  auto reference_pairs = ancestor_pairs(reference);

  std::size_t shared = 0;
  for (const auto& pair : learned_pairs) {
    shared += reference_pairs.count(pair);
  }

  SimilarityReport report;
  report.precision = learned_pairs.empty()
                         ? 0.0
                         : static_cast<double>(shared) /
                               static_cast<double>(learned_pairs.size());
  report.recall = reference_pairs.empty()
                      ? 0.0
                      : static_cast<double>(shared) /
                            static_cast<double>(reference_pairs.size());
  report.f1 = harmonic_f1(report.precision, report.recall);
  return report;
}

}  // namespace shmc
