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

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "plab/model.hpp"

// Syntactic identity of components across products, and the sharing regions
// it induces. Two components of different products count as the same asset
// iff their names and effective interfaces are equal; the effective
// interface is the declared accepts set united with all incoming edge
// signatures. Identity is necessary, not sufficient: it guarantees nothing
// about behavior.

namespace plab {

struct ComponentKey {
  std::string name;
  std::vector<MessageSignature> interface;  // sorted, unique

  auto operator<=>(const ComponentKey&) const = default;
};

std::string to_string(const ComponentKey& key);

/// Cross-product identity key of one component. Outgoing edges do not
/// contribute. Throws Error(unknown_component).
ComponentKey component_key(const ProductGraph& product, const std::string& name);

/// Keys of all components of one product. Names are unique per product, so
/// the set size equals the component count.
std::set<ComponentKey> product_keys(const ProductGraph& product);

/// Subset of product indices, canonically sorted.
using ProductSubset = std::set<std::size_t>;

/// Per-key product membership for a product list, answering which keys are
/// shared by which subsets of products. Supports up to 64 products.
class SharingLattice {
public:
  explicit SharingLattice(const std::vector<ProductGraph>& products);

  std::size_t product_count() const { return ids_.size(); }
  const std::vector<std::string>& product_ids() const { return ids_; }

  /// key -> bitmask of the products containing it (bit i = product i).
  const std::map<ComponentKey, std::uint64_t>& membership() const { return membership_; }

  /// Keys present in every product of the subset; the full index set yields
  /// the components shared among all products.
  std::set<ComponentKey> shared_by_all(const ProductSubset& subset) const;

  /// Keys present in every product of the subset and in no product outside
  /// it; a singleton subset yields the product's exclusive components.
  std::set<ComponentKey> exclusive_region(const ProductSubset& subset) const;

  /// All non-empty exclusive regions. They are pairwise disjoint and their
  /// union is the union of all products' keys.
  std::map<ProductSubset, std::set<ComponentKey>> exact_regions() const;

private:
  std::uint64_t subset_mask(const ProductSubset& subset) const;

  std::vector<std::string> ids_;
  std::map<ComponentKey, std::uint64_t> membership_;
};

std::set<ComponentKey> shared_by_all(const std::vector<ProductGraph>& products,
                                     const ProductSubset& subset);

std::set<ComponentKey> exclusive_region(const std::vector<ProductGraph>& products,
                                        const ProductSubset& subset);

}  // namespace plab
