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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "shmc/classify.hpp"
#include "shmc/config.hpp"
#include "shmc/corpus.hpp"
#include "shmc/index.hpp"
#include "shmc/model.hpp"
#include "shmc/taxonomy.hpp"
#include "shmc/tokenizer.hpp"

namespace {

std::string term_name(std::size_t i) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "w%04zu", i);
  return buffer;
}

// Zipf-weighted synthetic documents over `vocab` terms, ~100 tokens each,
// with a planted parent chain so hierarchization has edges to find.
shmc::Corpus make_corpus(std::size_t n_docs, std::size_t vocab) {
  std::mt19937 rng(42);
  std::size_t planted = vocab / 4;
  std::vector<std::size_t> parent(planted, planted);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 1; i < planted; ++i) {
    if (coin(rng) < 0.75) {
      parent[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    }
  }
  std::vector<double> cumulative(vocab);
  double total = 0.0;
  for (std::size_t r = 0; r < vocab; ++r) {
    total += 1.0 / static_cast<double>(r + 1);
    cumulative[r] = total;
  }
  std::uniform_int_distribution<std::size_t> length(80, 120);
  std::uniform_int_distribution<std::size_t> pick_planted(0, planted - 1);
  shmc::Corpus corpus;
  corpus.reserve(n_docs);
  for (std::size_t d = 0; d < n_docs; ++d) {
    shmc::Document doc;
    doc.id = "doc" + std::to_string(d);
    std::size_t node = pick_planted(rng);
    while (true) {
      doc.tokens.push_back(term_name(node));
      if (parent[node] >= planted) break;
      node = parent[node];
    }
    std::size_t want = length(rng);
    while (doc.tokens.size() < want) {
      double u = coin(rng) * total;
      std::size_t r = std::lower_bound(cumulative.begin(), cumulative.end(), u) -
                      cumulative.begin();
      doc.tokens.push_back(term_name(r));
    }
    for (const std::string& token : doc.tokens) {
      if (!doc.text.empty()) doc.text.push_back(' ');
      doc.text += token;
    }
    corpus.push_back(std::move(doc));
  }
  return corpus;
}

void BM_tokenize(benchmark::State& state) {
  shmc::TokenizerConfig config;
  std::string text;
  for (int i = 0; i < 200; ++i) {
    text += "Some Mixed-Case tokens, with punctuation; and Straße " +
            term_name(i) + " ";
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(shmc::tokenize(text, config));
  }
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_tokenize);

void BM_build_index(benchmark::State& state) {
  shmc::Corpus corpus = make_corpus(state.range(0), 2000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shmc::build_index(corpus));
  }
  state.SetItemsProcessed(state.iterations() * corpus.size());
}
BENCHMARK(BM_build_index)->Arg(1000)->Arg(5000);

void BM_learn(benchmark::State& state) {
  shmc::Corpus corpus = make_corpus(state.range(0), 2000);
  shmc::InvertedIndex index = shmc::build_index(corpus);
  shmc::PipelineConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(shmc::learn_model(index, config));
  }
  state.SetItemsProcessed(state.iterations() * corpus.size());
}
BENCHMARK(BM_learn)->Arg(1000)->Arg(5000);

void BM_classify(benchmark::State& state) {
  shmc::Corpus corpus = make_corpus(2000, 2000);
  shmc::Model model = shmc::learn_model(shmc::build_index(corpus),
                                        shmc::PipelineConfig{});
  shmc::Corpus items = make_corpus(state.range(0), 2000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shmc::classify_batch(items, model));
  }
  state.SetItemsProcessed(state.iterations() * items.size());
}
BENCHMARK(BM_classify)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
