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

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace shmc {

struct TokenizerConfig {
  // Terms removed after normalization. Compared against finished tokens, so
  // entries must themselves be in normalized (NFC, case-folded) form;
  // load_stopwords takes care of that.
  std::set<std::string> stopwords;
  // Minimum token length in Unicode code points. Must be >= 1.
  int min_token_len = 2;
};

// Normalizes text to NFC, case-folds it, and splits it into maximal runs of
// Unicode alphanumeric code points. Runs shorter than min_token_len code
// points and stopword runs are dropped; the remaining tokens keep text order.
// Invalid UTF-8 bytes act as separators.
std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config);

// Applies the same normalization as tokenize to a single term (no splitting,
// no length/stopword filtering). Used when ingesting stopword lists so that
// membership tests compare like with like.
std::string normalize_term(std::string_view term);

// Reads a stopword file: one term per line, blank lines ignored, each entry
// normalized via normalize_term.
std::set<std::string> load_stopwords(const std::string& path);

}  // namespace shmc
