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

#include "shmc/config.hpp"
#include "shmc/index.hpp"
#include "shmc/rules.hpp"
#include "shmc/taxonomy.hpp"

namespace shmc {

// Rounds to six decimal places by round-tripping through the fixed-point text
// form used in model files, so a value compares identically whether it was
// just computed or read back from disk.
double round6(double value);

// The frozen learned artifact: training statistics (df, N), idf table,
// taxonomy, rules, and the config snapshot. Everything classification needs.
//
// idf values and rule thresholds are quantized via round6 at freeze time;
// all later comparisons happen on the quantized numbers.
struct Model {
  std::uint64_t n_docs = 0;
  std::map<std::string, std::uint64_t, std::less<>> df;
  std::map<std::string, double, std::less<>> idf;  // round6(ln(n_docs / df))
  Taxonomy taxonomy;
  RuleSet rules;
  PipelineConfig config;

  bool knows_term(std::string_view term) const {
    return df.find(term) != df.end();
  }

  // Quantized idf of a known term; throws DataError otherwise.
  double idf_of(std::string_view term) const;

  static Model freeze(const InvertedIndex& index, Taxonomy taxonomy,
                      RuleSet rules, PipelineConfig config);
};

// Runs hierarchization + resolution over an index and freezes the result.
Model learn_model(const InvertedIndex& index, const PipelineConfig& config,
                  unsigned workers = default_workers());

}  // namespace shmc
