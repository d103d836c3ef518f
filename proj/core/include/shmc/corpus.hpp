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

#include <iosfwd>
#include <string>
#include <vector>

#include "shmc/parallel.hpp"
#include "shmc/tokenizer.hpp"

namespace shmc {

struct Document {
  std::string id;
  std::string text;
  std::vector<std::string> tokens;
};

using Corpus = std::vector<Document>;

// Parses a corpus from line-delimited JSON records ({"id": ..., "text": ...},
// one per line, UTF-8, LF). Blank lines are skipped. Every document comes out
// tokenized under `config`, in input order.
//
// Throws DataError on a malformed line (message carries the 1-based line
// number), on a duplicate id, and on an input with no records ("empty
// corpus"). Tokenization fans out over `workers` threads; the result does not
// depend on the worker count.
Corpus parse_corpus(std::istream& input, const TokenizerConfig& config,
                    unsigned workers = default_workers());

// Same record format as parse_corpus but an empty input is allowed: used for
// classification items, where an empty batch is a valid (empty) job.
Corpus read_items(std::istream& input, const TokenizerConfig& config,
                  unsigned workers = default_workers());

// File-opening convenience wrappers; throw IoError if the path is unreadable.
Corpus parse_corpus_file(const std::string& path, const TokenizerConfig& config,
                         unsigned workers = default_workers());
Corpus read_items_file(const std::string& path, const TokenizerConfig& config,
                       unsigned workers = default_workers());

}  // namespace shmc
