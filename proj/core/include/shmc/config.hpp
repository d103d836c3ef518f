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

#include <cstddef>
#include <set>
#include <string>

#include "shmc/tokenizer.hpp"

namespace shmc {

// Effective settings of one pipeline run. The learn step snapshots this into
// the model, so classification never needs the original config file.
struct PipelineConfig {
  int min_token_len = 2;
  std::set<std::string> stopwords;      // resolved content, not a path
  std::size_t min_df = 2;
  double max_df_frac = 0.8;
  double subsumption_threshold = 0.8;
  double rule_alpha = 0.5;

  TokenizerConfig tokenizer() const { return {stopwords, min_token_len}; }

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

// Validates all bounds; throws DataError naming the offending key
// ("max_df_frac out of range", ...).
void validate_config(const PipelineConfig& config);

// Loads a JSON config file. Recognized keys: min_token_len, stopwords_path,
// min_df, max_df_frac, subsumption_threshold, rule_alpha. Unknown keys are
// rejected. stopwords_path is resolved relative to the working directory and
// its content replaces `stopwords`. The result is validated.
PipelineConfig load_config_file(const std::string& path);

// Parses the same schema from an in-memory JSON string (file context only
// affects error messages).
PipelineConfig parse_config(const std::string& json_text);

}  // namespace shmc
