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

// Independent oracles for the property suites. Everything here recomputes
// from first principles (raw documents, literal rule application) and must
// stay decoupled from the library's internal evaluation paths.

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "shmc/classify.hpp"
#include "shmc/corpus.hpp"
#include "shmc/rules.hpp"
#include "shmc/taxonomy.hpp"

namespace shmc::test {

// Exhaustive rule application until nothing changes: the naive fixpoint the
// semi-naive engine must agree with.
inline std::set<std::string> naive_fixpoint(
    const std::map<std::string, double>& weights,
    const std::vector<Rule>& rules, const std::vector<TaxonomyEdge>& edges) {
  std::set<std::string> labels;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& rule : rules) {
      auto it = weights.find(rule.evidence_term);
      if (it != weights.end() && it->second >= rule.threshold) {
        changed |= labels.insert(rule.concept_term).second;
      }
    }
    for (const TaxonomyEdge& edge : edges) {
      if (labels.count(edge.narrower) && !labels.count(edge.broader)) {
        labels.insert(edge.broader);
        changed = true;
      }
    }
  }
  return labels;
}

// Document frequency straight off the raw corpus.
inline std::size_t brute_df(const Corpus& corpus, const std::string& term) {
  std::size_t df = 0;
  for (const Document& doc : corpus) {
    for (const std::string& token : doc.tokens) {
      if (token == term) {
        ++df;
        break;
      }
    }
  }
  return df;
}

// Co-occurrence document count straight off the raw corpus.
inline std::size_t brute_codf(const Corpus& corpus, const std::string& t1,
                              const std::string& t2) {
  std::size_t count = 0;
  for (const Document& doc : corpus) {
    bool has1 = false, has2 = false;
    for (const std::string& token : doc.tokens) {
      has1 |= token == t1;
      has2 |= token == t2;
    }
    if (has1 && has2) ++count;
  }
  return count;
}

// Reachability over taxonomy edges, by name, ignoring the library's
// adjacency tables.
inline bool edge_path_exists(const std::vector<TaxonomyEdge>& edges,
                             const std::string& from, const std::string& to,
                             const TaxonomyEdge* skip = nullptr) {
  std::vector<std::string> stack(1, from);
  std::set<std::string> seen;
  while (!stack.empty()) {
    std::string node = stack.back();
    stack.pop_back();
    if (node == to) return true;
    if (!seen.insert(node).second) continue;
    for (const TaxonomyEdge& edge : edges) {
      if (skip && edge == *skip) continue;
      if (edge.broader == node) stack.push_back(edge.narrower);
    }
  }
  return false;
}

// Upward closure of a label set over taxonomy edges, by name.
inline std::set<std::string> brute_ancestor_closure(
    const std::set<std::string>& labels, const std::vector<TaxonomyEdge>& edges) {
  std::set<std::string> closed = labels;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const TaxonomyEdge& edge : edges) {
      if (closed.count(edge.narrower) && !closed.count(edge.broader)) {
        closed.insert(edge.broader);
        changed = true;
      }
    }
  }
  return closed;
}

}  // namespace shmc::test
