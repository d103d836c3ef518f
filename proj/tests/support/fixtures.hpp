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

#include <sstream>
#include <string>

#include "shmc/config.hpp"
#include "shmc/corpus.hpp"
#include "shmc/index.hpp"
#include "shmc/model.hpp"

namespace shmc::test {

// The four-document fixture used across the suites:
//   D1 "apple fruit", D2 "apple pie fruit", D3 "banana fruit", D4 "car engine"
inline const char* kFixtureJsonl =
    "{\"id\": \"D1\", \"text\": \"apple fruit\"}\n"
    "{\"id\": \"D2\", \"text\": \"apple pie fruit\"}\n"
    "{\"id\": \"D3\", \"text\": \"banana fruit\"}\n"
    "{\"id\": \"D4\", \"text\": \"car engine\"}\n";

inline Corpus fixture_corpus(unsigned workers = 1) {
  std::istringstream in(kFixtureJsonl);
  return parse_corpus(in, TokenizerConfig{}, workers);
}

inline InvertedIndex fixture_index(unsigned workers = 1) {
  return build_index(fixture_corpus(workers), workers);
}

inline Model fixture_model(unsigned workers = 1) {
  return learn_model(fixture_index(workers), PipelineConfig{}, workers);
}

inline Document make_item(std::string id, std::string text,
                          const TokenizerConfig& config = {}) {
  Document doc;
  doc.id = std::move(id);
  doc.text = std::move(text);
  doc.tokens = tokenize(doc.text, config);
  return doc;
}

}  // namespace shmc::test
