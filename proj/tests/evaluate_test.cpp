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

#include <random>

#include "shmc/errors.hpp"
#include "shmc/evaluate.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace shmc;
using namespace shmc::test;

namespace {

ClassificationResult pred(std::string id, std::vector<std::string> labels) {
  return ClassificationResult{std::move(id), std::move(labels), {}};
}

}  // namespace

TEST_CASE("hierarchical_prf on the worked fixture case") {
  Model model = fixture_model();
  GoldLabeling gold = {{"i1", {"apple"}}};
  auto report = hierarchical_prf(gold, {pred("i1", {"fruit"})}, model.taxonomy);
  CHECK(report.precision == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.recall == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(report.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("hierarchical_prf perfect and empty predictions") {
  Model model = fixture_model();
  GoldLabeling gold = {{"i1", {"apple"}}, {"i2", {"fruit"}}};

  SUBCASE("identity predictions score 1") {
    auto report = hierarchical_prf(
        gold, {pred("i1", {"apple", "fruit"}), pred("i2", {"fruit"})},
        model.taxonomy);
    CHECK(report.precision == doctest::Approx(1.0));
    CHECK(report.recall == doctest::Approx(1.0));
    CHECK(report.f1 == doctest::Approx(1.0));
  }
  SUBCASE("empty predictions score 0 by convention") {
    auto report = hierarchical_prf(gold, {}, model.taxonomy);
    CHECK(report.precision == 0.0);
    CHECK(report.recall == 0.0);
    CHECK(report.f1 == 0.0);
  }
  SUBCASE("unknown gold concept is an error") {
    GoldLabeling bad = {{"i1", {"rocket"}}};
    CHECK_THROWS_WITH_AS(hierarchical_prf(bad, {}, model.taxonomy),
                         doctest::Contains("rocket"), DataError);
  }
}

TEST_CASE("hierarchical_prf augmentation is idempotent") {
  Model model = fixture_model();
  auto predictions = {pred("i1", {"apple"})};
  GoldLabeling plain = {{"i1", {"apple"}}};
  GoldLabeling augmented = {{"i1", {"apple", "fruit"}}};
  auto a = hierarchical_prf(plain, predictions, model.taxonomy);
  auto b = hierarchical_prf(augmented, predictions, model.taxonomy);
  CHECK(a.precision == b.precision);
  CHECK(a.recall == b.recall);
  CHECK(a.f1 == b.f1);
}

TEST_CASE("swapping gold and predictions exchanges hP and hR") {
  Model model = fixture_model();
  GoldLabeling as_gold = {{"i1", {"apple"}}, {"i2", {"fruit"}}};
  std::vector<ClassificationResult> as_pred = {pred("i1", {"fruit"}),
                                               pred("i2", {"apple"})};
  GoldLabeling swapped_gold = {{"i1", {"fruit"}}, {"i2", {"apple"}}};
  std::vector<ClassificationResult> swapped_pred = {pred("i1", {"apple"}),
                                                    pred("i2", {"fruit"})};
  auto forward = hierarchical_prf(as_gold, as_pred, model.taxonomy);
  auto backward = hierarchical_prf(swapped_gold, swapped_pred, model.taxonomy);
  CHECK(forward.precision == doctest::Approx(backward.recall).epsilon(1e-12));
  CHECK(forward.recall == doctest::Approx(backward.precision).epsilon(1e-12));
}

TEST_CASE("taxonomy_similarity on the worked example") {
  Taxonomy learned = build_taxonomy({{"fruit", "apple"}}, {"apple", "fruit"});
  Taxonomy reference = build_taxonomy({{"fruit", "apple"}, {"fruit", "banana"}},
                                      {"apple", "banana", "fruit"});
  auto report = taxonomy_similarity(learned, reference);
  CHECK(report.precision == doctest::Approx(1.0));
  CHECK(report.recall == doctest::Approx(0.5));
  CHECK(report.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("taxonomy_similarity identity and disjoint cases") {
  Taxonomy learned = build_taxonomy({{"fruit", "apple"}}, {"apple", "fruit"});
  SUBCASE("identical taxonomies") {
    auto report = taxonomy_similarity(learned, learned);
    CHECK(report.precision == doctest::Approx(1.0));
    CHECK(report.recall == doctest::Approx(1.0));
    CHECK(report.f1 == doctest::Approx(1.0));
  }
  SUBCASE("disjoint vocabularies") {
    Taxonomy other = build_taxonomy({{"metal", "iron"}}, {"iron", "metal"});
    auto report = taxonomy_similarity(learned, other);
    CHECK(report.precision == 0.0);
    CHECK(report.recall == 0.0);
    CHECK(report.f1 == 0.0);
  }
  SUBCASE("empty learned taxonomy") {
    auto report = taxonomy_similarity(Taxonomy{}, learned);
    CHECK(report.precision == 0.0);
    CHECK(report.recall == 0.0);
    CHECK(report.f1 == 0.0);
  }
}

TEST_CASE("similarity comparisons entail transitive ancestors") {
  // learned has the entailment a->c only via a->b->c; reference states it
  // directly: ancestor pairs still overlap on (c, a)
  Taxonomy learned = build_taxonomy({{"a", "b"}, {"b", "c"}}, {"a", "b", "c"});
  Taxonomy reference = build_taxonomy({{"a", "c"}}, {"a", "c"});
  auto report = taxonomy_similarity(learned, reference);
  // learned pairs: (b,a), (c,a), (c,b); reference pairs: (c,a)
  CHECK(report.precision == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(report.recall == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("swapping arguments exchanges precision and recall") {
  std::mt19937 rng(61);
  for (int round = 0; round < 15; ++round) {
    auto [c1, e1] = random_dag(rng, 7, 0.3);
    auto [c2, e2] = random_dag(rng, 6, 0.4);
    Taxonomy a = build_taxonomy(e1, c1);
    Taxonomy b = build_taxonomy(e2, c2);
    auto ab = taxonomy_similarity(a, b);
    auto ba = taxonomy_similarity(b, a);
    CHECK(ab.precision == doctest::Approx(ba.recall).epsilon(1e-12));
    CHECK(ab.recall == doctest::Approx(ba.precision).epsilon(1e-12));
    CHECK(ab.f1 == doctest::Approx(ba.f1).epsilon(1e-12));
  }
}
