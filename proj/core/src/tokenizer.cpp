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

#include "shmc/tokenizer.hpp"

#include <fstream>
#include <stdexcept>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "shmc/errors.hpp"

namespace shmc {

namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* instance = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || instance == nullptr) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  return *instance;
}

// NFC + full case folding. Invalid UTF-8 becomes U+FFFD, which is not
// alphanumeric and therefore splits runs.
icu::UnicodeString normalized_fold(std::string_view text) {
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString result = nfc().normalize(input, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("unicode normalization failed");
  }
  result.foldCase();
  return result;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config) {
  std::vector<std::string> tokens;
  if (text.empty()) return tokens;

  icu::UnicodeString normalized = normalized_fold(text);

  icu::UnicodeString run;
  int32_t run_points = 0;
  auto flush_run = [&] {
    if (run_points >= config.min_token_len) {
      std::string token;
      run.toUTF8String(token);
      if (config.stopwords.find(token) == config.stopwords.end()) {
        tokens.push_back(std::move(token));
      }
    }
    run.remove();
    run_points = 0;
  };

  for (int32_t i = 0; i < normalized.length();) {
    UChar32 c = normalized.char32At(i);
    if (u_isalnum(c)) {
      run.append(c);
      ++run_points;
    } else {
      flush_run();
    }
    i += U16_LENGTH(c);
  }
  flush_run();
  return tokens;
}

std::string normalize_term(std::string_view term) {
  icu::UnicodeString normalized = normalized_fold(term);
  std::string result;
  normalized.toUTF8String(result);
  return result;
}

std::set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open stopword file: " + path);
  }
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // trim ASCII whitespace
    std::size_t b = line.find_first_not_of(" \t");
    std::size_t e = line.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    std::string term = normalize_term(line.substr(b, e - b + 1));
    if (!term.empty()) words.insert(std::move(term));
  }
  return words;
}

}  // namespace shmc
