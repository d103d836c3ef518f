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

#include "shmc/taxonomy.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <iterator>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "shmc/errors.hpp"

namespace shmc {

namespace {

void validate_params(const HierarchizeParams& params) {
  if (params.min_df < 1) {
    throw DataError("min_df out of range");
  }
  if (!(params.max_df_frac > 0.0 && params.max_df_frac <= 1.0)) {
    throw DataError("max_df_frac out of range");
  }
  if (!(params.subsumption_threshold > 0.5 &&
        params.subsumption_threshold <= 1.0)) {
    throw DataError("subsumption_threshold out of range");
  }
}

// Word-block bitset rows, one per concept, for ancestor bookkeeping.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols)
      : words_per_row_((cols + 63) / 64), bits_(rows * words_per_row_, 0) {}

  void set(std::size_t row, std::size_t col) {
    bits_[row * words_per_row_ + col / 64] |= std::uint64_t{1} << (col % 64);
  }
  bool test(std::size_t row, std::size_t col) const {
    return (bits_[row * words_per_row_ + col / 64] >>
            (col % 64)) & 1;
  }
  void or_row(std::size_t dst, std::size_t src) {
    auto* d = &bits_[dst * words_per_row_];
    const auto* s = &bits_[src * words_per_row_];
    for (std::size_t w = 0; w < words_per_row_; ++w) d[w] |= s[w];
  }

 private:
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

bool Taxonomy::contains(std::string_view concept_term) const {
  return pos_.find(concept_term) != pos_.end();
}

std::optional<std::uint32_t> Taxonomy::find(std::string_view concept_term) const {
  auto it = pos_.find(concept_term);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::uint32_t> Taxonomy::parents_of(std::uint32_t pos) const {
  return parents_[pos];
}

std::span<const std::uint32_t> Taxonomy::children_of(std::uint32_t pos) const {
  return children_[pos];
}

std::vector<std::string> Taxonomy::ancestors(std::string_view concept_term) const {
  auto start = find(concept_term);
  if (!start) {
    throw DataError("unknown concept '" + std::string(concept_term) + "'");
  }
  std::vector<bool> seen(concepts_.size(), false);
  std::deque<std::uint32_t> queue(1, *start);
  std::vector<std::string> result;
  while (!queue.empty()) {
    std::uint32_t node = queue.front();
    queue.pop_front();
    for (std::uint32_t parent : parents_[node]) {
      if (!seen[parent]) {
        seen[parent] = true;
        result.push_back(concepts_[parent]);
        queue.push_back(parent);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::size_t Taxonomy::depth() const {
  if (concepts_.empty()) return 0;
  // Longest chain via DP over the DAG; concepts_ order is not topological,
  // so resolve lazily with memoized recursion unrolled onto a stack.
  std::vector<std::int64_t> memo(concepts_.size(), -1);
  std::size_t best = 0;
  for (std::uint32_t start = 0; start < concepts_.size(); ++start) {
    std::vector<std::uint32_t> stack(1, start);
    while (!stack.empty()) {
      std::uint32_t node = stack.back();
      if (memo[node] >= 0) {
        stack.pop_back();
        continue;
      }
      bool ready = true;
      std::int64_t longest = 0;
      for (std::uint32_t parent : parents_[node]) {
        if (memo[parent] < 0) {
          stack.push_back(parent);
          ready = false;
        } else {
          longest = std::max(longest, memo[parent] + 1);
        }
      }
      if (ready) {
        memo[node] = longest;
        best = std::max<std::size_t>(best, static_cast<std::size_t>(longest));
        stack.pop_back();
      }
    }
  }
  return best + 1;  // +1 for the edge down from the virtual root
}

bool operator==(const Taxonomy& a, const Taxonomy& b) {
  return a.concepts_ == b.concepts_ && a.edges_ == b.edges_;
}

std::vector<std::string> select_concepts(const InvertedIndex& index,
                                         const HierarchizeParams& params) {
  validate_params(params);
  if (index.doc_count() == 0) {
    throw DataError("empty index");
  }
  double n = static_cast<double>(index.doc_count());
  std::vector<std::string> selected;
  for (std::uint32_t t = 0; t < index.vocab_size(); ++t) {
    std::size_t df = index.postings_at(t).size();
    if (df >= params.min_df && static_cast<double>(df) / n <= params.max_df_frac) {
      selected.push_back(std::string(index.term_at(t)));
    }
  }
  return selected;  // terms() is sorted, so this is too
}

std::size_t cooccurrence_df(const InvertedIndex& index, std::string_view t1,
                            std::string_view t2) {
  auto a = index.postings(t1);
  auto b = index.postings(t2);
  std::size_t shared = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].doc == b[j].doc) {
      ++shared;
      ++i;
      ++j;
    } else if (a[i].doc < b[j].doc) {
      ++i;
    } else {
      ++j;
    }
  }
  return shared;
}

namespace {

// Document-driven co-occurrence harvest. For each document, every unordered
// pair of distinct concepts present in it bumps one counter; equivalent to
// intersecting postings pairwise but linear in corpus size for sparse pairs.
// Dense matrix when the concept set is small enough, hash map otherwise.
class CooccurrenceCounts {
 public:
  CooccurrenceCounts(const InvertedIndex& index,
                     const std::vector<std::uint32_t>& concept_terms,
                     unsigned workers) {
    n_ = concept_terms.size();
    dense_ = n_ <= kDenseLimit;

    // concept position per vocabulary term, or npos
    std::vector<std::uint32_t> concept_of(index.vocab_size(), kNone);
    for (std::uint32_t c = 0; c < concept_terms.size(); ++c) {
      concept_of[concept_terms[c]] = c;
    }

    if (dense_) {
      matrix_.assign(n_ * n_, 0);
      std::mutex merge_mutex;
      parallel_chunks(index.doc_count(), workers,
                      [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint64_t> local(n_ * n_, 0);
        std::vector<std::uint32_t> present;
        for (std::size_t doc = begin; doc < end; ++doc) {
          present.clear();
          for (const auto& dt : index.doc_terms(static_cast<std::uint32_t>(doc))) {
            if (concept_of[dt.term] != kNone) present.push_back(concept_of[dt.term]);
          }
          for (std::size_t i = 0; i < present.size(); ++i) {
            for (std::size_t j = i + 1; j < present.size(); ++j) {
              std::uint32_t a = present[i], b = present[j];
              if (a > b) std::swap(a, b);
              ++local[static_cast<std::size_t>(a) * n_ + b];
            }
          }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (std::size_t k = 0; k < local.size(); ++k) matrix_[k] += local[k];
      });
    } else {
      std::mutex merge_mutex;
      parallel_chunks(index.doc_count(), workers,
                      [&](std::size_t begin, std::size_t end) {
        std::unordered_map<std::uint64_t, std::uint64_t> local;
        std::vector<std::uint32_t> present;
        for (std::size_t doc = begin; doc < end; ++doc) {
          present.clear();
          for (const auto& dt : index.doc_terms(static_cast<std::uint32_t>(doc))) {
            if (concept_of[dt.term] != kNone) present.push_back(concept_of[dt.term]);
          }
          for (std::size_t i = 0; i < present.size(); ++i) {
            for (std::size_t j = i + 1; j < present.size(); ++j) {
              std::uint32_t a = present[i], b = present[j];
              if (a > b) std::swap(a, b);
              ++local[(static_cast<std::uint64_t>(a) << 32) | b];
            }
          }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (const auto& [key, count] : local) sparse_[key] += count;
      });
    }
  }

  std::uint64_t get(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    if (dense_) return matrix_[static_cast<std::size_t>(a) * n_ + b];
    auto it = sparse_.find((static_cast<std::uint64_t>(a) << 32) | b);
    return it == sparse_.end() ? 0 : it->second;
  }

 private:
  static constexpr std::size_t kDenseLimit = 4096;
  static constexpr std::uint32_t kNone = 0xffffffffu;
  std::size_t n_ = 0;
  bool dense_ = true;
  std::vector<std::uint64_t> matrix_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

}  // namespace

std::vector<TaxonomyEdge> subsumption_edges(
    const InvertedIndex& index, const std::vector<std::string>& concepts,
    double subsumption_threshold, unsigned workers) {
  if (!(subsumption_threshold > 0.5 && subsumption_threshold <= 1.0)) {
    throw DataError("subsumption_threshold out of range");
  }

  std::vector<std::uint32_t> concept_terms;
  concept_terms.reserve(concepts.size());
  for (const std::string& c : concepts) {
    concept_terms.push_back(index.term_position(c));  // throws if unknown
  }

  CooccurrenceCounts counts(index, concept_terms, workers);

  std::vector<std::size_t> df(concepts.size());
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    df[i] = index.postings_at(concept_terms[i]).size();
  }

  // One unordered pair can yield at most one edge: both conditionals share
  // the co-occurrence numerator, so the strict P(y|x) < P(x|y) requirement
  // orients the edge toward the higher-df side (and ties yield none).
  // Collection order varies with scheduling; the final sort canonicalizes.
  std::vector<TaxonomyEdge> edges;
  std::mutex edges_mutex;
  parallel_chunks(concepts.size(), workers,
                  [&](std::size_t begin, std::size_t end) {
    std::vector<TaxonomyEdge> local;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < concepts.size(); ++j) {
        std::uint64_t shared = counts.get(static_cast<std::uint32_t>(i),
                                          static_cast<std::uint32_t>(j));
        if (shared == 0) continue;
        double p_i_given_j = static_cast<double>(shared) / static_cast<double>(df[j]);
        double p_j_given_i = static_cast<double>(shared) / static_cast<double>(df[i]);
        if (p_i_given_j >= subsumption_threshold && p_j_given_i < p_i_given_j) {
          local.push_back(TaxonomyEdge{concepts[i], concepts[j]});
        } else if (p_j_given_i >= subsumption_threshold && p_i_given_j < p_j_given_i) {
          local.push_back(TaxonomyEdge{concepts[j], concepts[i]});
        }
      }
    }
    std::lock_guard<std::mutex> lock(edges_mutex);
    edges.insert(edges.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  });
  std::sort(edges.begin(), edges.end());
  return edges;
}

Taxonomy build_taxonomy(std::vector<TaxonomyEdge> raw_edges,
                        std::vector<std::string> concepts) {
  std::sort(concepts.begin(), concepts.end());
  concepts.erase(std::unique(concepts.begin(), concepts.end()), concepts.end());

  Taxonomy tax;
  tax.concepts_ = std::move(concepts);
  tax.pos_.reserve(tax.concepts_.size());
  for (std::uint32_t i = 0; i < tax.concepts_.size(); ++i) {
    tax.pos_[tax.concepts_[i]] = i;
  }

  std::sort(raw_edges.begin(), raw_edges.end());
  raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()),
                  raw_edges.end());

  std::size_t n = tax.concepts_.size();
  std::vector<std::vector<std::uint32_t>> parents(n), children(n);
  for (const TaxonomyEdge& e : raw_edges) {
    auto b = tax.find(e.broader);
    auto nr = tax.find(e.narrower);
    if (!b || !nr) {
      throw DataError("edge endpoint outside the concept set: " + e.broader +
                      " -> " + e.narrower);
    }
    if (*b == *nr) {
      throw std::logic_error("self edge in taxonomy input");
    }
    parents[*nr].push_back(*b);
    children[*b].push_back(*nr);
  }

  // Kahn topological order; the subsumption construction guarantees
  // acyclicity (df strictly decreases along every edge), so a cycle here
  // means broken input.
  std::vector<std::uint32_t> indegree(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    indegree[v] = static_cast<std::uint32_t>(parents[v].size());
  }
  std::vector<std::uint32_t> topo;
  topo.reserve(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) topo.push_back(v);
  }
  for (std::size_t head = 0; head < topo.size(); ++head) {
    for (std::uint32_t child : children[topo[head]]) {
      if (--indegree[child] == 0) topo.push_back(child);
    }
  }
  if (topo.size() != n) {
    throw std::logic_error("cycle detected in taxonomy edges");
  }

  // Strict-ancestor closure in topological order, then transitive reduction:
  // a parent edge is redundant exactly when its source is an ancestor of a
  // sibling parent. Reduction of a DAG is unique, so iteration order is
  // immaterial.
  BitMatrix ancestors(n, n);
  for (std::uint32_t v : topo) {
    for (std::uint32_t p : parents[v]) {
      ancestors.set(v, p);
      ancestors.or_row(v, p);
    }
  }
  tax.parents_.assign(n, {});
  tax.children_.assign(n, {});
  tax.edges_.clear();
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t p : parents[v]) {
      bool redundant = false;
      for (std::uint32_t q : parents[v]) {
        if (q != p && ancestors.test(q, p)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) {
        tax.parents_[v].push_back(p);
        tax.children_[p].push_back(v);
        tax.edges_.push_back(TaxonomyEdge{tax.concepts_[p], tax.concepts_[v]});
      }
    }
  }
  std::sort(tax.edges_.begin(), tax.edges_.end());
  for (auto& list : tax.parents_) std::sort(list.begin(), list.end());
  for (auto& list : tax.children_) std::sort(list.begin(), list.end());

  tax.roots_.clear();
  for (std::uint32_t v = 0; v < n; ++v) {
    if (tax.parents_[v].empty()) tax.roots_.push_back(tax.concepts_[v]);
  }
  return tax;
}

Taxonomy induce_taxonomy(const InvertedIndex& index,
                         const HierarchizeParams& params, unsigned workers) {
  std::vector<std::string> concepts = select_concepts(index, params);
  std::vector<TaxonomyEdge> edges =
      subsumption_edges(index, concepts, params.subsumption_threshold, workers);
  return build_taxonomy(std::move(edges), std::move(concepts));
}

}  // namespace shmc
