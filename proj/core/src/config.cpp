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

#include "shmc/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shmc/errors.hpp"

namespace shmc {

namespace {

using nlohmann::json;

}  // namespace

void validate_config(const PipelineConfig& config) {
  if (config.min_token_len < 1) {
    throw DataError("min_token_len out of range");
  }
  if (config.min_df < 1) {
    throw DataError("min_df out of range");
  }
  if (!(config.max_df_frac > 0.0 && config.max_df_frac <= 1.0)) {
    throw DataError("max_df_frac out of range");
  }
  if (!(config.subsumption_threshold > 0.5 &&
        config.subsumption_threshold <= 1.0)) {
    throw DataError("subsumption_threshold out of range");
  }
  if (!(config.rule_alpha > 0.0)) {
    throw DataError("rule_alpha out of range");
  }
}

PipelineConfig parse_config(const std::string& json_text) {
  json parsed = json::parse(json_text, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    throw DataError("config is not a JSON object");
  }

  PipelineConfig config;
  for (const auto& [key, value] : parsed.items()) {
    if (key == "min_token_len") {
      if (!value.is_number_integer()) throw DataError("min_token_len out of range");
      config.min_token_len = value.get<int>();
    } else if (key == "stopwords_path") {
      if (!value.is_string()) throw DataError("stopwords_path must be a string");
      config.stopwords = load_stopwords(value.get<std::string>());
    } else if (key == "min_df") {
      if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw DataError("min_df out of range");
      }
      config.min_df = value.get<std::size_t>();
    } else if (key == "max_df_frac") {
      if (!value.is_number()) throw DataError("max_df_frac out of range");
      config.max_df_frac = value.get<double>();
    } else if (key == "subsumption_threshold") {
      if (!value.is_number()) throw DataError("subsumption_threshold out of range");
      config.subsumption_threshold = value.get<double>();
    } else if (key == "rule_alpha") {
      if (!value.is_number()) throw DataError("rule_alpha out of range");
      config.rule_alpha = value.get<double>();
    } else {
      throw DataError("unknown config key '" + key + "'");
    }
  }
  validate_config(config);
  return config;
}

PipelineConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace shmc
