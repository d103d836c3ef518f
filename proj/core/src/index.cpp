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

#include "shmc/index.hpp"

#include <algorithm>
#include <numeric>

#include "shmc/errors.hpp"

namespace shmc {

bool InvertedIndex::has_doc(std::string_view doc_id) const {
  return doc_pos_.find(doc_id) != doc_pos_.end();
}

bool InvertedIndex::has_term(std::string_view term) const {
  return term_pos_.find(term) != term_pos_.end();
}

std::uint32_t InvertedIndex::doc_position(std::string_view doc_id) const {
  auto it = doc_pos_.find(doc_id);
  if (it == doc_pos_.end()) {
    throw DataError("unknown document id '" + std::string(doc_id) + "'");
  }
  return it->second;
}

std::uint32_t InvertedIndex::term_position(std::string_view term) const {
  auto it = term_pos_.find(term);
  if (it == term_pos_.end()) {
    throw DataError("unknown term '" + std::string(term) + "'");
  }
  return it->second;
}

std::uint64_t InvertedIndex::doc_length(std::string_view doc_id) const {
  return doc_lengths_[doc_position(doc_id)];
}

std::size_t InvertedIndex::document_frequency(std::string_view term) const {
  auto it = term_pos_.find(term);
  return it == term_pos_.end() ? 0 : postings_[it->second].size();
}

std::uint64_t InvertedIndex::occurrence_count(std::string_view term,
                                              std::string_view doc_id) const {
  std::uint32_t doc = doc_position(doc_id);
  auto it = term_pos_.find(term);
  if (it == term_pos_.end()) return 0;
  const auto& list = postings_[it->second];
  auto p = std::lower_bound(list.begin(), list.end(), doc,
                            [](const Posting& a, std::uint32_t d) { return a.doc < d; });
  return (p != list.end() && p->doc == doc) ? p->count : 0;
}

std::span<const InvertedIndex::Posting> InvertedIndex::postings(
    std::string_view term) const {
  auto it = term_pos_.find(term);
  if (it == term_pos_.end()) return {};
  return postings_[it->second];
}

std::span<const InvertedIndex::Posting> InvertedIndex::postings_at(
    std::uint32_t term_pos) const {
  return postings_[term_pos];
}

std::span<const InvertedIndex::DocTerm> InvertedIndex::doc_terms(
    std::uint32_t doc_pos) const {
  return forward_[doc_pos];
}

void InvertedIndex::rebuild_lookups() {
  doc_pos_.clear();
  doc_pos_.reserve(doc_ids_.size());
  for (std::uint32_t i = 0; i < doc_ids_.size(); ++i) doc_pos_[doc_ids_[i]] = i;
  term_pos_.clear();
  term_pos_.reserve(terms_.size());
  for (std::uint32_t i = 0; i < terms_.size(); ++i) term_pos_[terms_[i]] = i;
}

void InvertedIndex::rebuild_forward() {
  forward_.assign(doc_ids_.size(), {});
  for (std::uint32_t t = 0; t < postings_.size(); ++t) {
    for (const Posting& p : postings_[t]) {
      forward_[p.doc].push_back(DocTerm{t, p.count});
    }
  }
  // postings are walked in ascending term order, so each forward list comes
  // out sorted by term position already
}

bool operator==(const InvertedIndex& a, const InvertedIndex& b) {
  return a.doc_ids_ == b.doc_ids_ && a.doc_lengths_ == b.doc_lengths_ &&
         a.terms_ == b.terms_ && a.postings_ == b.postings_;
}

InvertedIndex InvertedIndex::restore(
    std::vector<std::string> doc_ids, std::vector<std::uint64_t> doc_lengths,
    std::vector<std::string> terms,
    std::vector<std::vector<Posting>> postings) {
  if (doc_ids.size() != doc_lengths.size() || terms.size() != postings.size()) {
    throw DataError("index parts have mismatched sizes");
  }
  if (!std::is_sorted(doc_ids.begin(), doc_ids.end()) ||
      std::adjacent_find(doc_ids.begin(), doc_ids.end()) != doc_ids.end()) {
    throw DataError("index document table not sorted and unique");
  }
  if (!std::is_sorted(terms.begin(), terms.end()) ||
      std::adjacent_find(terms.begin(), terms.end()) != terms.end()) {
    throw DataError("index term table not sorted and unique");
  }
  std::vector<std::uint64_t> totals(doc_ids.size(), 0);
  for (const auto& list : postings) {
    if (list.empty()) {
      throw DataError("index has an empty posting list");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].doc >= doc_ids.size() || list[i].count < 1 ||
          (i > 0 && list[i].doc <= list[i - 1].doc)) {
        throw DataError("index posting list invalid or out of order");
      }
      totals[list[i].doc] += list[i].count;
    }
  }
  if (totals != doc_lengths) {
    throw DataError("index posting counts do not sum to document lengths");
  }
  InvertedIndex index;
  index.doc_ids_ = std::move(doc_ids);
  index.doc_lengths_ = std::move(doc_lengths);
  index.terms_ = std::move(terms);
  index.postings_ = std::move(postings);
  index.rebuild_lookups();
  index.rebuild_forward();
  return index;
}

class IndexBuilder {
 public:
  static InvertedIndex build(const Corpus& corpus, unsigned workers) {
    if (corpus.empty()) {
      throw DataError("empty corpus");
    }

    // Canonical document order: lexicographic by id.
    std::vector<std::uint32_t> order(corpus.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return corpus[a].id < corpus[b].id;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (corpus[order[i - 1]].id == corpus[order[i]].id) {
        throw DataError("duplicate document id '" + corpus[order[i]].id + "'");
      }
    }

    InvertedIndex index;
    index.doc_ids_.reserve(corpus.size());
    index.doc_lengths_.resize(corpus.size());
    for (std::uint32_t pos : order) {
      index.doc_ids_.push_back(corpus[pos].id);
    }

    // Per-document term counting, parallel over the canonical order. Each
    // document's counts depend on that document alone, so the partition does
    // not affect the result.
    std::vector<std::vector<std::pair<std::string, std::uint64_t>>> doc_counts(
        corpus.size());
    parallel_chunks(order.size(), workers, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const Document& doc = corpus[order[i]];
        detail::StringMap<std::uint64_t> counts;
        for (const std::string& token : doc.tokens) {
          ++counts[token];
        }
        auto& sorted = doc_counts[i];
        sorted.assign(counts.begin(), counts.end());
        std::sort(sorted.begin(), sorted.end());
        index.doc_lengths_[i] = doc.tokens.size();
      }
    });

    // Vocabulary: sorted union of all per-document terms.
    std::vector<std::string> vocab;
    {
      detail::StringMap<std::uint32_t> seen;
      for (const auto& counts : doc_counts) {
        for (const auto& [term, count] : counts) {
          seen.emplace(term, 0);
        }
      }
      vocab.reserve(seen.size());
      for (const auto& [term, unused] : seen) vocab.push_back(term);
      std::sort(vocab.begin(), vocab.end());
    }
    index.terms_ = std::move(vocab);
    index.rebuild_lookups();

    // Postings in ascending doc order per term.
    index.postings_.assign(index.terms_.size(), {});
    for (std::uint32_t doc = 0; doc < doc_counts.size(); ++doc) {
      for (const auto& [term, count] : doc_counts[doc]) {
        index.postings_[index.term_pos_.find(term)->second].push_back(
            InvertedIndex::Posting{doc, count});
      }
    }
    index.rebuild_forward();
    return index;
  }
};

InvertedIndex build_index(const Corpus& corpus, unsigned workers) {
  return IndexBuilder::build(corpus, workers);
}

std::size_t document_frequency(const InvertedIndex& index,
                               std::string_view term) {
  return index.document_frequency(term);
}

}  // namespace shmc
