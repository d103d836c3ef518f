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
#include <map>
#include <string>
#include <string_view>

#include "shmc/index.hpp"

namespace shmc {

// Per-document TF-IDF weights; entries hold exactly the terms present in the
// document, keyed lexicographically.
struct TermVector {
  std::string doc_id;
  std::map<std::string, double> entries;
};

// Total occurrence count of every vocabulary term across the corpus.
struct CorpusFrequencyVector {
  std::map<std::string, std::uint64_t> entries;
};

// Term frequency: occurrences of `term` in the document divided by the
// document's retained-token length. 0 when the term is absent. Throws
// DataError for an unknown doc_id.
double tf(const InvertedIndex& index, std::string_view term,
          std::string_view doc_id);

// Inverse document frequency: ln(N / df(term)), unsmoothed; 0 when the term
// appears in every document. Throws DataError when df(term) = 0.
double idf(const InvertedIndex& index, std::string_view term);

// The full TF-IDF vector of one document. Throws DataError for an unknown
// doc_id.
TermVector tfidf_vector(const InvertedIndex& index, std::string_view doc_id);

// Corpus-wide term frequency vector (occurrence totals).
CorpusFrequencyVector corpus_frequency(const InvertedIndex& index);

}  // namespace shmc
