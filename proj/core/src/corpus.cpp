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

#include "shmc/corpus.hpp"

#include <fstream>
#include <istream>
#include <unordered_set>

#include <json.hpp>

#include "shmc/errors.hpp"

namespace shmc {

namespace {

using nlohmann::json;

Corpus read_records(std::istream& input, const TokenizerConfig& config,
                    unsigned workers, bool allow_empty) {
  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      throw DataError("line " + std::to_string(line_no) +
                      ": not a JSON object record");
    }
    auto id_it = record.find("id");
    if (id_it == record.end() || !id_it->is_string()) {
      throw DataError("line " + std::to_string(line_no) +
                      ": missing or non-string field 'id'");
    }
    auto text_it = record.find("text");
    if (text_it == record.end() || !text_it->is_string()) {
      throw DataError("line " + std::to_string(line_no) +
                      ": missing or non-string field 'text'");
    }
    std::string id = id_it->get<std::string>();
    if (id.empty()) {
      throw DataError("line " + std::to_string(line_no) + ": empty 'id'");
    }
    if (!seen_ids.insert(id).second) {
      throw DataError("line " + std::to_string(line_no) +
                      ": duplicate document id '" + id + "'");
    }
    corpus.push_back(Document{std::move(id), text_it->get<std::string>(), {}});
  }

  if (corpus.empty() && !allow_empty) {
    throw DataError("empty corpus");
  }

  parallel_chunks(corpus.size(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      corpus[i].tokens = tokenize(corpus[i].text, config);
    }
  });
  return corpus;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open input file: " + path);
  }
  return in;
}

}  // namespace

Corpus parse_corpus(std::istream& input, const TokenizerConfig& config,
                    unsigned workers) {
  return read_records(input, config, workers, /*allow_empty=*/false);
}

Corpus read_items(std::istream& input, const TokenizerConfig& config,
                  unsigned workers) {
  return read_records(input, config, workers, /*allow_empty=*/true);
}

Corpus parse_corpus_file(const std::string& path, const TokenizerConfig& config,
                         unsigned workers) {
  auto in = open_input(path);
  return parse_corpus(in, config, workers);
}

Corpus read_items_file(const std::string& path, const TokenizerConfig& config,
                       unsigned workers) {
  auto in = open_input(path);
  return read_items(in, config, workers);
}

}  // namespace shmc
