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

#include "shmc/classify.hpp"
#include "shmc/evaluate.hpp"
#include "shmc/index.hpp"
#include "shmc/model.hpp"

namespace shmc {

// All artifact serializers emit canonical bytes: object keys sorted, posting
// and rule lists in their canonical orders, LF endings. Writing the same
// in-memory value twice yields identical files.

// Index file. Carries the tokenizer settings the corpus was indexed with so
// that learn can snapshot them into the model.
struct IndexFile {
  InvertedIndex index;
  TokenizerConfig tokenizer;
};

std::string serialize_index(const InvertedIndex& index,
                            const TokenizerConfig& tokenizer);
IndexFile parse_index(const std::string& text);
void save_index_file(const std::string& path, const InvertedIndex& index,
                     const TokenizerConfig& tokenizer);
IndexFile load_index_file(const std::string& path);

// Model file.
std::string serialize_model(const Model& model);
Model parse_model(const std::string& text);
void save_model_file(const std::string& path, const Model& model);
Model load_model_file(const std::string& path);

// Classification output: one JSON record per line with fields id, labels,
// most_specific; records ordered by item id.
std::string serialize_results(const std::vector<ClassificationResult>& results);
std::vector<ClassificationResult> parse_results(std::istream& input);
std::vector<ClassificationResult> load_results_file(const std::string& path);

// Gold labels: one JSON record per line with fields id and labels.
GoldLabeling parse_gold(std::istream& input);
GoldLabeling load_gold_file(const std::string& path);

// Shared low-level helpers (also used by the CLI).
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace shmc
