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

#include "shmc/vectorize.hpp"

#include <cmath>

#include "shmc/errors.hpp"

namespace shmc {

double tf(const InvertedIndex& index, std::string_view term,
          std::string_view doc_id) {
  std::uint64_t length = index.doc_length(doc_id);
  std::uint64_t count = index.occurrence_count(term, doc_id);
  if (count == 0) return 0.0;
  return static_cast<double>(count) / static_cast<double>(length);
}

double idf(const InvertedIndex& index, std::string_view term) {
  std::size_t df = index.document_frequency(term);
  if (df == 0) {
    throw DataError("unknown term '" + std::string(term) + "'");
  }
  return std::log(static_cast<double>(index.doc_count()) /
                  static_cast<double>(df));
}

TermVector tfidf_vector(const InvertedIndex& index, std::string_view doc_id) {
  std::uint32_t doc = index.doc_position(doc_id);
  double length = static_cast<double>(index.doc_length_at(doc));
  TermVector vec;
  vec.doc_id = std::string(doc_id);
  for (const auto& [term_pos, count] : index.doc_terms(doc)) {
    std::string_view term = index.term_at(term_pos);
    double term_idf = std::log(static_cast<double>(index.doc_count()) /
                               static_cast<double>(index.postings_at(term_pos).size()));
    vec.entries.emplace(std::string(term),
                        (static_cast<double>(count) / length) * term_idf);
  }
  return vec;
}

CorpusFrequencyVector corpus_frequency(const InvertedIndex& index) {
  CorpusFrequencyVector vec;
  for (std::uint32_t t = 0; t < index.vocab_size(); ++t) {
    std::uint64_t total = 0;
    for (const auto& posting : index.postings_at(t)) {
      total += posting.count;
    }
    vec.entries.emplace(std::string(index.term_at(t)), total);
  }
  return vec;
}

}  // namespace shmc
