//------------------------------------------------------------------------------
//
//   Copyright 2026 The plab Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "plab/identity.hpp"
#include "plab/metrics.hpp"
#include "plab/model.hpp"

// Assembles classifications, sharing regions, metric values, warnings and
// recommendations into one report, and renders it as a human-readable table,
// a machine-readable JSON document, or a Graphviz export.

namespace plab {

struct ReportConfig {
  double tau_ir = 0.5;     // refactor candidate: IR above this
  double tau_prr = 0.25;   // exclusion candidate: PrR below this ...
  double tau_iprr = 0.25;  // ... and IPrR below this
  bool strict = false;
};

enum class RecommendationKind {
  SeedPair,           // start the product line from this pair
  RefactorCandidate,  // analyze this product for refactoring potential
  ExclusionCandidate, // consider leaving this product out
  NoPotential,        // nothing is commonly reusable
  NotMeaningfulPair,  // a pairwise comparison with an undefined ratio
};

const char* to_string(RecommendationKind kind);

struct Recommendation {
  RecommendationKind kind;
  std::vector<std::string> subjects;  // product ids
  std::string rationale;              // cites the triggering metric values

  bool operator==(const Recommendation&) const = default;
};

struct PairValue {
  std::size_t i = 0;
  std::size_t j = 0;  // i < j
  Ratio value;
};

struct SharingRegion {
  std::vector<std::string> product_ids;
  std::vector<ComponentKey> keys;
};

struct MetricsReport {
  std::vector<std::string> product_ids;
  std::vector<std::size_t> component_counts;

  std::size_t soc = 0;
  Ratio ioc;
  std::vector<Ratio> prr;   // per product
  std::vector<Ratio> iprr;  // per product
  std::vector<Ratio> ir;    // per product
  std::vector<PairValue> rb;  // per pair, (i, j) with i < j
  std::vector<PairValue> rr;

  std::vector<SharingRegion> regions;  // non-empty exact regions
  std::vector<std::string> warnings;
  std::vector<Recommendation> recommendations;
  std::vector<std::string> notes;
  ReportConfig config;

  // Carried for rendering (graph export, shared-component marking).
  std::vector<ProductGraph> products;
  std::set<ComponentKey> shared_all;
};

enum class OutputFormat { Text, Machine, Dot };

/// Classifies every product, builds the sharing lattice, evaluates all
/// metrics, checks commonality consistency, and derives recommendations.
/// Throws Error(too_few_products) for fewer than 2 products and propagates
/// classification and validation errors.
MetricsReport build_report(const std::vector<ProductGraph>& products, const ReportConfig& config = {});

/// Recommendations derived from a report's metric grid; already invoked by
/// build_report.
std::vector<Recommendation> recommend(const MetricsReport& report);

std::string render(const MetricsReport& report, OutputFormat format);

/// One Graphviz digraph for one product: solid edges for required
/// dependencies, dashed for optional, marked nodes for the given keys.
std::string render_product_dot(const ProductGraph& product, const std::set<ComponentKey>& marked);

}  // namespace plab
