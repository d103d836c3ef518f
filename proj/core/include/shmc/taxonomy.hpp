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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shmc/index.hpp"

namespace shmc {

// The virtual top concept. Anchors every parentless concept, is never part of
// the vocabulary, never serialized, and never reported as a label.
inline constexpr std::string_view kVirtualRoot = "⊤";

struct HierarchizeParams {
  std::size_t min_df = 2;              // >= 1
  double max_df_frac = 0.8;            // in (0, 1]
  double subsumption_threshold = 0.8;  // in (0.5, 1]
};

// A broader -> narrower pair. `broader` subsumes `narrower`.
struct TaxonomyEdge {
  std::string broader;
  std::string narrower;
  friend auto operator<=>(const TaxonomyEdge&, const TaxonomyEdge&) = default;
};

// The learned concept DAG. Concepts are sorted terms; edges are the
// transitive reduction of the broader-narrower relation, sorted by
// (broader, narrower); roots() lists the concepts attached directly under the
// virtual top. Always acyclic, every concept reachable from the top.
class Taxonomy {
 public:
  Taxonomy() = default;  // only the virtual root

  const std::vector<std::string>& concepts() const { return concepts_; }
  const std::vector<TaxonomyEdge>& edges() const { return edges_; }
  const std::vector<std::string>& roots() const { return roots_; }

  bool empty() const { return concepts_.empty(); }
  std::size_t size() const { return concepts_.size(); }

  bool contains(std::string_view concept_term) const;
  std::optional<std::uint32_t> find(std::string_view concept_term) const;
  std::string_view concept_at(std::uint32_t pos) const { return concepts_[pos]; }

  // Adjacency by concept position; root edges excluded (a root simply has no
  // parents here).
  std::span<const std::uint32_t> parents_of(std::uint32_t pos) const;
  std::span<const std::uint32_t> children_of(std::uint32_t pos) const;

  // All strict ancestors of a concept, virtual root excluded, sorted.
  // Throws DataError for an unknown concept.
  std::vector<std::string> ancestors(std::string_view concept_term) const;

  // Longest root-to-leaf chain, counted in edges below the virtual root.
  std::size_t depth() const;

  friend bool operator==(const Taxonomy&, const Taxonomy&);
  friend Taxonomy build_taxonomy(std::vector<TaxonomyEdge> raw_edges,
                                 std::vector<std::string> concepts);

 private:
  std::vector<std::string> concepts_;
  std::vector<TaxonomyEdge> edges_;
  std::vector<std::string> roots_;
  std::vector<std::vector<std::uint32_t>> parents_;
  std::vector<std::vector<std::uint32_t>> children_;
  detail::StringMap<std::uint32_t> pos_;
};

// Concept selection: every term with df >= min_df and df/N <= max_df_frac,
// sorted. Throws DataError on out-of-range params or an empty index.
std::vector<std::string> select_concepts(const InvertedIndex& index,
                                         const HierarchizeParams& params);

// Number of documents containing both terms (sorted-postings intersection);
// 0 when either term is unknown. cooccurrence_df(t, t) == df(t).
std::size_t cooccurrence_df(const InvertedIndex& index, std::string_view t1,
                            std::string_view t2);

// Raw subsumption edges over the concept set: (x broader y) for every ordered
// pair of distinct concepts with P(x|y) >= threshold and P(y|x) < P(x|y),
// where P(x|y) = cooccurrence_df(x, y) / df(y). Result sorted by
// (broader, narrower). Throws DataError if a concept is missing from the
// vocabulary or the threshold is out of (0.5, 1].
std::vector<TaxonomyEdge> subsumption_edges(
    const InvertedIndex& index, const std::vector<std::string>& concepts,
    double subsumption_threshold, unsigned workers = default_workers());

// Transitive reduction plus virtual-root attachment. Edge endpoints must come
// from `concepts`; a cycle in the raw edges is a logic error (the subsumption
// construction cannot produce one).
Taxonomy build_taxonomy(std::vector<TaxonomyEdge> raw_edges,
                        std::vector<std::string> concepts);

// select_concepts + subsumption_edges + build_taxonomy in one call.
Taxonomy induce_taxonomy(const InvertedIndex& index,
                         const HierarchizeParams& params,
                         unsigned workers = default_workers());

}  // namespace shmc
