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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "shmc/corpus.hpp"

namespace shmc {

namespace detail {
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};
template <typename V>
using StringMap =
    std::unordered_map<std::string, V, StringHash, std::equal_to<>>;
}  // namespace detail

// Immutable inverted index over a tokenized corpus.
//
// Documents and terms are held in lexicographically sorted tables, and
// postings are sorted by document position, so two indexes built from the
// same corpus are structurally identical no matter how the build was
// partitioned. Positions (uint32_t) index into doc_ids() / terms().
class InvertedIndex {
 public:
  struct Posting {
    std::uint32_t doc = 0;       // position in doc_ids()
    std::uint64_t count = 0;     // occurrences of the term in that document
    friend bool operator==(const Posting&, const Posting&) = default;
  };
  struct DocTerm {
    std::uint32_t term = 0;      // position in terms()
    std::uint64_t count = 0;
    friend bool operator==(const DocTerm&, const DocTerm&) = default;
  };

  InvertedIndex() = default;

  std::size_t doc_count() const { return doc_ids_.size(); }
  std::size_t vocab_size() const { return terms_.size(); }

  const std::vector<std::string>& doc_ids() const { return doc_ids_; }
  const std::vector<std::string>& terms() const { return terms_; }

  bool has_doc(std::string_view doc_id) const;
  bool has_term(std::string_view term) const;

  // Position lookups; throw DataError for unknown names.
  std::uint32_t doc_position(std::string_view doc_id) const;
  std::uint32_t term_position(std::string_view term) const;

  std::string_view doc_id_at(std::uint32_t pos) const { return doc_ids_[pos]; }
  std::string_view term_at(std::uint32_t pos) const { return terms_[pos]; }

  // Retained-token length of a document. Throws DataError for unknown ids.
  std::uint64_t doc_length(std::string_view doc_id) const;
  std::uint64_t doc_length_at(std::uint32_t pos) const { return doc_lengths_[pos]; }

  // Number of documents containing the term; 0 for unknown terms.
  std::size_t document_frequency(std::string_view term) const;

  // Occurrences of term in the given document; 0 when absent. Throws
  // DataError for an unknown document id.
  std::uint64_t occurrence_count(std::string_view term,
                                 std::string_view doc_id) const;

  // Posting list sorted by doc position; empty span for unknown terms.
  std::span<const Posting> postings(std::string_view term) const;
  std::span<const Posting> postings_at(std::uint32_t term_pos) const;

  // Forward view: the (term, count) pairs of one document, sorted by term
  // position. Mirrors the postings exactly.
  std::span<const DocTerm> doc_terms(std::uint32_t doc_pos) const;

  friend bool operator==(const InvertedIndex&, const InvertedIndex&);

  // Deserialization entry point: rebuilds lookup and forward tables from
  // already-canonical parts (doc ids and terms sorted, postings ascending by
  // doc position, lengths parallel to doc ids). Throws DataError if the parts
  // are out of order or inconsistent.
  static InvertedIndex restore(std::vector<std::string> doc_ids,
                               std::vector<std::uint64_t> doc_lengths,
                               std::vector<std::string> terms,
                               std::vector<std::vector<Posting>> postings);

 private:
  friend class IndexBuilder;

  void rebuild_lookups();
  void rebuild_forward();

  std::vector<std::string> doc_ids_;                 // sorted
  std::vector<std::uint64_t> doc_lengths_;           // parallel to doc_ids_
  std::vector<std::string> terms_;                   // sorted
  std::vector<std::vector<Posting>> postings_;       // parallel to terms_
  std::vector<std::vector<DocTerm>> forward_;        // parallel to doc_ids_
  detail::StringMap<std::uint32_t> doc_pos_;
  detail::StringMap<std::uint32_t> term_pos_;
};

// Builds the index for a tokenized corpus. Per-document counting fans out
// over `workers` threads; the merged result is canonical (independent of the
// partitioning and of corpus order). Throws DataError on an empty corpus or
// a duplicate document id.
InvertedIndex build_index(const Corpus& corpus,
                          unsigned workers = default_workers());

// Document frequency df(term): length of the term's posting list, 0 for
// unknown terms.
std::size_t document_frequency(const InvertedIndex& index,
                               std::string_view term);

}  // namespace shmc
