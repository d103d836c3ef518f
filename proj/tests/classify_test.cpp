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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "shmc/classify.hpp"
#include "shmc/errors.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/naive_engine.hpp"

using namespace shmc;
using namespace shmc::test;

TEST_CASE("populate computes frozen-idf weights over known terms") {
  Model model = fixture_model();

  SUBCASE("unknown tokens count toward the denominator only") {
    FactBase facts = populate({make_item("i1", "fresh apple basket")}, model);
    REQUIRE(facts.items.size() == 1);
    REQUIRE(facts.items[0].weights.size() == 1);
    CHECK(facts.items[0].weights.at("apple") ==
          doctest::Approx(0.231049).epsilon(1e-6));
    CHECK(facts.items[0].labels.empty());
  }
  SUBCASE("no known terms means no weights") {
    FactBase facts = populate({make_item("i1", "unseen words only")}, model);
    CHECK(facts.items[0].weights.empty());
  }
  SUBCASE("fruit salad") {
    FactBase facts = populate({make_item("i1", "fruit salad")}, model);
    REQUIRE(facts.items[0].weights.size() == 1);
    CHECK(facts.items[0].weights.at("fruit") ==
          doctest::Approx(0.143841).epsilon(1e-6));
  }
  SUBCASE("duplicate item ids are rejected") {
    CHECK_THROWS_WITH_AS(
        populate({make_item("x", "a b"), make_item("x", "c d")}, model),
        doctest::Contains("duplicate"), DataError);
  }
}

TEST_CASE("infer runs both rule kinds to fixpoint") {
  Model model = fixture_model();

  SUBCASE("direct firing plus upward closure") {
    FactBase facts = populate({make_item("i1", "fresh apple basket")}, model);
    InferStats stats = infer(facts, model);
    CHECK(facts.items[0].labels == std::set<std::string>{"apple", "fruit"});
    // only the apple rule fired directly; fruit came from closure
    CHECK(stats.rule_firings == 1);
  }
  SUBCASE("closure-only concept stays out without evidence") {
    FactBase facts = populate({make_item("i1", "fruit salad")}, model);
    infer(facts, model);
    CHECK(facts.items[0].labels == std::set<std::string>{"fruit"});
  }
  SUBCASE("non-concept vocabulary yields nothing") {
    FactBase facts = populate({make_item("i1", "car wash")}, model);
    infer(facts, model);
    CHECK(facts.items[0].labels.empty());
  }
}

TEST_CASE("most_specific keeps minimal elements") {
  Model model = fixture_model();
  const Taxonomy& tax = model.taxonomy;
  CHECK(most_specific({"apple", "fruit"}, tax) == std::set<std::string>{"apple"});
  CHECK(most_specific({"fruit"}, tax) == std::set<std::string>{"fruit"});
  CHECK(most_specific({}, tax).empty());
  CHECK_THROWS_WITH_AS(most_specific({"apple"}, tax),
                       doctest::Contains("upward-closed"), DataError);
  CHECK_THROWS_AS(most_specific({"nope"}, tax), DataError);
}

TEST_CASE("classify_item composes the pipeline") {
  Model model = fixture_model();

  ClassificationResult apple = classify_item(make_item("i1", "fresh apple basket"), model);
  CHECK(apple.all_labels == std::vector<std::string>{"apple", "fruit"});
  CHECK(apple.most_specific == std::vector<std::string>{"apple"});

  ClassificationResult fruit = classify_item(make_item("i2", "fruit salad"), model);
  CHECK(fruit.all_labels == std::vector<std::string>{"fruit"});
  CHECK(fruit.most_specific == std::vector<std::string>{"fruit"});

  ClassificationResult empty = classify_item(make_item("i3", ""), model);
  CHECK(empty.all_labels.empty());
  CHECK(empty.most_specific.empty());
}

TEST_CASE("classify_batch orders by item id regardless of input order") {
  Model model = fixture_model();
  Corpus items = {make_item("zz", "apple"), make_item("aa", "fruit fruit"),
                  make_item("mm", "car")};
  auto results = classify_batch(items, model, 3);
  REQUIRE(results.size() == 3);
  CHECK(results[0].item_id == "aa");
  CHECK(results[1].item_id == "mm");
  CHECK(results[2].item_id == "zz");
  CHECK_THROWS_AS(
      classify_batch({make_item("x", "a"), make_item("x", "b")}, model, 2),
      DataError);
}

TEST_CASE("a label propagates along every hierarchical path") {
  Model model;
  model.taxonomy = build_taxonomy(
      {{"top", "left"}, {"top", "right"}, {"left", "bottom"}, {"right", "bottom"}},
      {"bottom", "left", "right", "top"});
  for (const std::string& c : model.taxonomy.concepts()) {
    model.rules.rules.push_back(Rule{c, c, 0.5});
  }
  FactBase facts;
  facts.items.push_back({"it", {{"bottom", 0.9}}, {}});
  infer(facts, model);
  CHECK(facts.items[0].labels ==
        std::set<std::string>{"bottom", "left", "right", "top"});
  CHECK(most_specific(facts.items[0].labels, model.taxonomy) ==
        std::set<std::string>{"bottom"});
}

TEST_CASE("label sets are upward-closed on random corpora") {
  std::mt19937 rng(43);
  for (int round = 0; round < 20; ++round) {
    Corpus corpus = random_corpus(rng);
    InvertedIndex index = build_index(corpus);
    Model model = learn_model(index, PipelineConfig{});
    Corpus items = random_items(rng, 10);
    for (const auto& result : classify_batch(items, model)) {
      std::set<std::string> labels(result.all_labels.begin(),
                                   result.all_labels.end());
      CHECK(brute_ancestor_closure(labels, model.taxonomy.edges()) == labels);
      // most_specific members have no labeled strict descendant
      std::set<std::string> minimal(result.most_specific.begin(),
                                    result.most_specific.end());
      for (const std::string& label : labels) {
        bool has_descendant_in_set = false;
        for (const std::string& other : labels) {
          if (other != label &&
              edge_path_exists(model.taxonomy.edges(), label, other)) {
            has_descendant_in_set = true;
            break;
          }
        }
        CHECK(minimal.count(label) == (has_descendant_in_set ? 0u : 1u));
      }
    }
  }
}

TEST_CASE("raising alpha never adds labels") {
  std::mt19937 rng(47);
  for (int round = 0; round < 10; ++round) {
    Corpus corpus = random_corpus(rng);
    InvertedIndex index = build_index(corpus);
    PipelineConfig config;
    Model base = learn_model(index, config);
    config.rule_alpha = 1.0;
    Model strict = learn_model(index, config);
    Corpus items = random_items(rng, 8);
    auto loose_results = classify_batch(items, base);
    auto strict_results = classify_batch(items, strict);
    REQUIRE(loose_results.size() == strict_results.size());
    for (std::size_t i = 0; i < loose_results.size(); ++i) {
      std::set<std::string> loose(loose_results[i].all_labels.begin(),
                                  loose_results[i].all_labels.end());
      for (const std::string& label : strict_results[i].all_labels) {
        CHECK(loose.count(label) == 1);
      }
    }
  }
}

TEST_CASE("semi-naive inference matches the naive fixpoint") {
  std::mt19937 rng(53);

  SUBCASE("models learned from small corpora") {
    CorpusShape shape;
    shape.min_docs = 2;
    shape.max_docs = 12;
    shape.min_vocab = 4;
    shape.max_vocab = 14;
    for (int round = 0; round < 60; ++round) {
      Corpus corpus = random_corpus(rng, shape);
      InvertedIndex index = build_index(corpus);
      Model model = learn_model(index, PipelineConfig{});
      Corpus items = random_items(rng, 5, 14);
      FactBase facts = populate(items, model);
      infer(facts, model);
      for (const auto& item : facts.items) {
        CHECK(item.labels == naive_fixpoint(item.weights, model.rules.rules,
                                            model.taxonomy.edges()));
      }
    }
  }

  SUBCASE("synthetic DAGs with arbitrary weights") {
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    for (int round = 0; round < 60; ++round) {
      std::size_t n = size(rng);
      auto [concepts, edges] = random_dag(rng, n, 0.3);
      Model model;
      model.taxonomy = build_taxonomy(edges, concepts);
      model.rules.alpha = 1.0;
      for (const std::string& c : model.taxonomy.concepts()) {
        model.rules.rules.push_back(Rule{c, c, weight(rng)});
      }
      FactBase facts;
      facts.items.push_back({"synthetic", {}, {}});
      for (const std::string& c : concepts) {
        if (weight(rng) < 0.6) facts.items[0].weights[c] = weight(rng);
      }
      InferStats stats = infer(facts, model);
      CHECK(facts.items[0].labels ==
            naive_fixpoint(facts.items[0].weights, model.rules.rules,
                           model.taxonomy.edges()));
      CHECK(stats.closure_rounds <= model.taxonomy.depth() + 1);
    }
  }
}

TEST_CASE("batch classification is deterministic across workers and order") {
  std::mt19937 rng(59);
  Corpus corpus = random_corpus(rng);
  Model model = learn_model(build_index(corpus), PipelineConfig{});
  Corpus items = random_items(rng, 25);
  auto one = classify_batch(items, model, 1);
  auto many = classify_batch(items, model, 8);
  CHECK(one == many);
  std::shuffle(items.begin(), items.end(), rng);
  CHECK(classify_batch(items, model, 4) == one);
}
