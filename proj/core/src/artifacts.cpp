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

#include "shmc/artifacts.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "shmc/errors.hpp"

namespace shmc {

namespace {

using nlohmann::json;

constexpr int kIndexVersion = 1;
constexpr int kModelVersion = 1;

json require(const json& doc, const char* key, const char* what) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw DataError(std::string(what) + ": missing field '" + key + "'");
  }
  return *it;
}

void check_header(const json& doc, const char* format, int version,
                  const char* what) {
  if (!doc.is_object()) {
    throw DataError(std::string(what) + ": not a JSON object");
  }
  if (require(doc, "format", what) != format) {
    throw DataError(std::string(what) + ": wrong format tag");
  }
  if (require(doc, "version", what) != version) {
    throw DataError(std::string(what) + ": unsupported version");
  }
}

json tokenizer_to_json(const TokenizerConfig& tokenizer) {
  json doc;
  doc["min_token_len"] = tokenizer.min_token_len;
  doc["stopwords"] = tokenizer.stopwords;  // std::set serializes sorted
  return doc;
}

TokenizerConfig tokenizer_from_json(const json& doc, const char* what) {
  TokenizerConfig tokenizer;
  tokenizer.min_token_len = require(doc, "min_token_len", what).get<int>();
  for (const auto& word : require(doc, "stopwords", what)) {
    tokenizer.stopwords.insert(word.get<std::string>());
  }
  return tokenizer;
}

json config_to_json(const PipelineConfig& config) {
  json doc;
  doc["min_token_len"] = config.min_token_len;
  doc["stopwords"] = config.stopwords;
  doc["min_df"] = config.min_df;
  doc["max_df_frac"] = config.max_df_frac;
  doc["subsumption_threshold"] = config.subsumption_threshold;
  doc["rule_alpha"] = config.rule_alpha;
  return doc;
}

PipelineConfig config_from_json(const json& doc, const char* what) {
  PipelineConfig config;
  config.min_token_len = require(doc, "min_token_len", what).get<int>();
  for (const auto& word : require(doc, "stopwords", what)) {
    config.stopwords.insert(word.get<std::string>());
  }
  config.min_df = require(doc, "min_df", what).get<std::size_t>();
  config.max_df_frac = require(doc, "max_df_frac", what).get<double>();
  config.subsumption_threshold =
      require(doc, "subsumption_threshold", what).get<double>();
  config.rule_alpha = require(doc, "rule_alpha", what).get<double>();
  return config;
}

}  // namespace

std::string serialize_index(const InvertedIndex& index,
                            const TokenizerConfig& tokenizer) {
  json doc;
  doc["format"] = "shmc-index";
  doc["version"] = kIndexVersion;
  doc["n_docs"] = index.doc_count();
  doc["tokenizer"] = tokenizer_to_json(tokenizer);

  json lengths = json::object();
  for (std::uint32_t d = 0; d < index.doc_count(); ++d) {
    lengths[std::string(index.doc_id_at(d))] = index.doc_length_at(d);
  }
  doc["doc_lengths"] = std::move(lengths);

  json postings = json::object();
  for (std::uint32_t t = 0; t < index.vocab_size(); ++t) {
    json list = json::array();
    for (const auto& posting : index.postings_at(t)) {
      list.push_back(json::array(
          {std::string(index.doc_id_at(posting.doc)), posting.count}));
    }
    postings[std::string(index.term_at(t))] = std::move(list);
  }
  doc["postings"] = std::move(postings);
  return doc.dump(2) + "\n";
}

IndexFile parse_index(const std::string& text) try {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw DataError("index file: invalid JSON");
  }
  check_header(doc, "shmc-index", kIndexVersion, "index file");

  IndexFile result;
  result.tokenizer =
      tokenizer_from_json(require(doc, "tokenizer", "index file"), "index file");

  json lengths = require(doc, "doc_lengths", "index file");
  json postings = require(doc, "postings", "index file");
  if (!lengths.is_object() || !postings.is_object()) {
    throw DataError("index file: malformed tables");
  }

  std::vector<std::string> doc_ids;
  std::vector<std::uint64_t> doc_lengths;
  doc_ids.reserve(lengths.size());
  for (const auto& [id, value] : lengths.items()) {
    doc_ids.push_back(id);  // nlohmann object iteration is key-sorted
    doc_lengths.push_back(value.get<std::uint64_t>());
  }
  std::uint64_t n_docs = require(doc, "n_docs", "index file").get<std::uint64_t>();
  if (n_docs != doc_ids.size()) {
    throw DataError("index file: n_docs does not match doc_lengths");
  }

  detail::StringMap<std::uint32_t> doc_pos;
  doc_pos.reserve(doc_ids.size());
  for (std::uint32_t i = 0; i < doc_ids.size(); ++i) doc_pos[doc_ids[i]] = i;

  std::vector<std::string> terms;
  std::vector<std::vector<InvertedIndex::Posting>> lists;
  terms.reserve(postings.size());
  for (const auto& [term, list] : postings.items()) {
    if (!list.is_array()) throw DataError("index file: malformed posting list");
    std::vector<InvertedIndex::Posting> parsed;
    parsed.reserve(list.size());
    for (const auto& entry : list) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string()) {
        throw DataError("index file: malformed posting entry");
      }
      auto pos_it = doc_pos.find(entry[0].get<std::string>());
      if (pos_it == doc_pos.end()) {
        throw DataError("index file: posting references unknown document");
      }
      parsed.push_back(
          InvertedIndex::Posting{pos_it->second, entry[1].get<std::uint64_t>()});
    }
    terms.push_back(term);
    lists.push_back(std::move(parsed));
  }

  result.index =
      InvertedIndex::restore(std::move(doc_ids), std::move(doc_lengths),
                             std::move(terms), std::move(lists));
  return result;
} catch (const json::exception& e) {
  throw DataError(std::string("index file: ") + e.what());
}

void save_index_file(const std::string& path, const InvertedIndex& index,
                     const TokenizerConfig& tokenizer) {
  write_text_file(path, serialize_index(index, tokenizer));
}

IndexFile load_index_file(const std::string& path) {
  return parse_index(read_text_file(path));
}

std::string serialize_model(const Model& model) {
  json doc;
  doc["format"] = "shmc-model";
  doc["version"] = kModelVersion;
  doc["n_docs"] = model.n_docs;
  doc["config"] = config_to_json(model.config);

  json vocabulary = json::object();
  for (const auto& [term, df] : model.df) {
    json entry;
    entry["df"] = df;
    entry["idf"] = model.idf.at(term);
    vocabulary[term] = std::move(entry);
  }
  doc["vocabulary"] = std::move(vocabulary);

  json taxonomy;
  taxonomy["concepts"] = model.taxonomy.concepts();
  json edges = json::array();
  for (const TaxonomyEdge& edge : model.taxonomy.edges()) {
    edges.push_back(json::array({edge.broader, edge.narrower}));
  }
  taxonomy["edges"] = std::move(edges);
  doc["taxonomy"] = std::move(taxonomy);

  json rules;
  rules["alpha"] = model.rules.alpha;
  json rule_items = json::array();
  for (const Rule& rule : model.rules.rules) {
    json entry;
    entry["concept"] = rule.concept_term;
    entry["term"] = rule.evidence_term;
    entry["threshold"] = rule.threshold;
    rule_items.push_back(std::move(entry));
  }
  rules["items"] = std::move(rule_items);
  doc["rules"] = std::move(rules);
  return doc.dump(2) + "\n";
}

Model parse_model(const std::string& text) try {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw DataError("model file: invalid JSON");
  }
  check_header(doc, "shmc-model", kModelVersion, "model file");

  Model model;
  model.n_docs = require(doc, "n_docs", "model file").get<std::uint64_t>();
  model.config =
      config_from_json(require(doc, "config", "model file"), "model file");

  json vocabulary = require(doc, "vocabulary", "model file");
  if (!vocabulary.is_object()) {
    throw DataError("model file: malformed vocabulary");
  }
  for (const auto& [term, entry] : vocabulary.items()) {
    model.df[term] = require(entry, "df", "model file").get<std::uint64_t>();
    model.idf[term] = require(entry, "idf", "model file").get<double>();
  }

  json taxonomy = require(doc, "taxonomy", "model file");
  std::vector<std::string> concepts;
  for (const auto& value : require(taxonomy, "concepts", "model file")) {
    concepts.push_back(value.get<std::string>());
  }
  std::vector<TaxonomyEdge> edges;
  for (const auto& value : require(taxonomy, "edges", "model file")) {
    if (!value.is_array() || value.size() != 2) {
      throw DataError("model file: malformed taxonomy edge");
    }
    edges.push_back(
        TaxonomyEdge{value[0].get<std::string>(), value[1].get<std::string>()});
  }
  try {
    model.taxonomy = build_taxonomy(std::move(edges), std::move(concepts));
  } catch (const std::logic_error& e) {
    throw DataError(std::string("model file: invalid taxonomy: ") + e.what());
  }

  json rules = require(doc, "rules", "model file");
  model.rules.alpha = require(rules, "alpha", "model file").get<double>();
  for (const auto& entry : require(rules, "items", "model file")) {
    model.rules.rules.push_back(
        Rule{require(entry, "concept", "model file").get<std::string>(),
             require(entry, "term", "model file").get<std::string>(),
             require(entry, "threshold", "model file").get<double>()});
  }
  for (const Rule& rule : model.rules.rules) {
    if (!model.taxonomy.contains(rule.concept_term)) {
      throw DataError("model file: rule concept '" + rule.concept_term +
                      "' missing from taxonomy");
    }
  }
  return model;
} catch (const json::exception& e) {
  throw DataError(std::string("model file: ") + e.what());
}

void save_model_file(const std::string& path, const Model& model) {
  write_text_file(path, serialize_model(model));
}

Model load_model_file(const std::string& path) {
  return parse_model(read_text_file(path));
}

std::string serialize_results(
    const std::vector<ClassificationResult>& results) {
  std::ostringstream out;
  for (const ClassificationResult& result : results) {
    json record;
    record["id"] = result.item_id;
    record["labels"] = result.all_labels;
    record["most_specific"] = result.most_specific;
    out << record.dump() << '\n';
  }
  return out.str();
}

std::vector<ClassificationResult> parse_results(std::istream& input) {
  std::vector<ClassificationResult> results;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object() ||
        !record.contains("id") || !record["id"].is_string() ||
        !record.contains("labels") || !record["labels"].is_array()) {
      throw DataError("line " + std::to_string(line_no) +
                      ": malformed classification record");
    }
    ClassificationResult result;
    result.item_id = record["id"].get<std::string>();
    for (const auto& label : record["labels"]) {
      if (!label.is_string()) {
        throw DataError("line " + std::to_string(line_no) +
                        ": non-string label");
      }
      result.all_labels.push_back(label.get<std::string>());
    }
    if (record.contains("most_specific") && record["most_specific"].is_array()) {
      for (const auto& label : record["most_specific"]) {
        if (!label.is_string()) {
          throw DataError("line " + std::to_string(line_no) +
                          ": non-string label");
        }
        result.most_specific.push_back(label.get<std::string>());
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

std::vector<ClassificationResult> load_results_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open results file: " + path);
  }
  return parse_results(in);
}

GoldLabeling parse_gold(std::istream& input) {
  GoldLabeling gold;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object() ||
        !record.contains("id") || !record["id"].is_string() ||
        !record.contains("labels") || !record["labels"].is_array()) {
      throw DataError("line " + std::to_string(line_no) +
                      ": malformed gold record");
    }
    std::string id = record["id"].get<std::string>();
    if (gold.count(id)) {
      throw DataError("line " + std::to_string(line_no) +
                      ": duplicate gold item id '" + id + "'");
    }
    std::set<std::string>& labels = gold[id];
    for (const auto& label : record["labels"]) {
      if (!label.is_string()) {
        throw DataError("line " + std::to_string(line_no) +
                        ": non-string gold label");
      }
      labels.insert(label.get<std::string>());
    }
  }
  return gold;
}

GoldLabeling load_gold_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open gold file: " + path);
  }
  return parse_gold(in);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failure: " + path);
  }
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open file for writing: " + path);
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("write failure: " + path);
  }
}

}  // namespace shmc
