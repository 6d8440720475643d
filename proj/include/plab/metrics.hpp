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
#include "plab/model.hpp"

// The seven commonality/variability metrics over a classified product set.
// All arithmetic is exact; zero-denominator cases yield the Undefined ratio
// instead of failing, so a report can always be rendered. Metrics operate on
// component keys after identity resolution, never on raw per-product names.

namespace plab {

/// A product set prepared for metric evaluation: per-product key sets split
/// by classification, plus the sharing lattice. Needs at least 2 products.
class ProductSetAnalysis {
public:
  ProductSetAnalysis(std::vector<ProductGraph> products, std::vector<Classification> classifications);

  std::size_t product_count() const { return products_.size(); }
  const std::vector<std::string>& product_ids() const { return lattice_.product_ids(); }
  const ProductGraph& product(std::size_t index) const;
  const Classification& classification(std::size_t index) const;
  const SharingLattice& lattice() const { return lattice_; }

  const std::set<ComponentKey>& keys(std::size_t index) const;           // C_p
  const std::set<ComponentKey>& required_keys(std::size_t index) const;  // C_p,r
  const std::set<ComponentKey>& optional_keys(std::size_t index) const;  // C_p,o

private:
  void check_index(std::size_t index) const;

  std::vector<ProductGraph> products_;
  std::vector<Classification> classifications_;
  SharingLattice lattice_;
  std::vector<std::set<ComponentKey>> keys_;
  std::vector<std::set<ComponentKey>> required_keys_;
  std::vector<std::set<ComponentKey>> optional_keys_;
};

/// |intersection of all products' key sets|: the number of components shared
/// by every product. 0 means no commonly reusable components exist.
std::size_t size_of_commonality(const ProductSetAnalysis& analysis);

/// A component shared by all products whose required/optional status is not
/// the same everywhere. Such keys make the required/optional split of the
/// commonality ambiguous.
struct StatusConflict {
  ComponentKey key;
  std::vector<std::string> required_in;  // product ids
  std::vector<std::string> optional_in;

  bool operator==(const StatusConflict&) const = default;
};

/// One conflict per commonly shared key with mixed status; empty iff the
/// commonality splits cleanly into required and optional parts.
std::vector<StatusConflict> commonality_consistency_check(const ProductSetAnalysis& analysis);

/// |intersection of required sets| / SoC. Undefined when SoC = 0.
Ratio impact_of_commonality(const ProductSetAnalysis& analysis);

/// SoC / |C_p_i|: how much of product i is covered by the shared core.
Ratio product_related_reusability(const ProductSetAnalysis& analysis, std::size_t index);

/// |intersection of required sets| / |C_p_i,r|. Undefined when product i has
/// no required components.
Ratio impact_of_product_related_reusability(const ProductSetAnalysis& analysis, std::size_t index);

/// SoC / |C_p_i ∩ C_p_j|, pairwise. Undefined when the pair shares nothing.
Ratio reusability_benefit(const ProductSetAnalysis& analysis, std::size_t i, std::size_t j);

/// |C_p_i ∩ C_p_j| / |C_p_i ∪ C_p_j|: the Jaccard similarity of the pair.
Ratio relationship_ratio(const ProductSetAnalysis& analysis, std::size_t i, std::size_t j);

/// |C_p_i minus every other product| / |C_p_i|: the share of product i that
/// nothing else can reuse.
Ratio individualization_ratio(const ProductSetAnalysis& analysis, std::size_t index);

}  // namespace plab
