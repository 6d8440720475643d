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

#include "plab/identity.hpp"

#include <algorithm>

namespace plab {

std::string to_string(const ComponentKey& key) {
  std::string out = key.name;
  for (const auto& signature : key.interface) out += ' ' + to_string(signature);
  return out;
}

ComponentKey component_key(const ProductGraph& product, const std::string& name) {
  const Component* component = product.find_component(name);
  if (component == nullptr) {
    throw Error(Errc::unknown_component,
                "no component '" + name + "' in product '" + product.product_id + "'");
  }
  ComponentKey key;
  key.name = name;
  key.interface = component->declared_accepts;
  for (const auto& edge : product.edges) {
    if (edge.target == name) key.interface.push_back(edge.signature);
  }
  std::sort(key.interface.begin(), key.interface.end());
  key.interface.erase(std::unique(key.interface.begin(), key.interface.end()), key.interface.end());
  return key;
}

std::set<ComponentKey> product_keys(const ProductGraph& product) {
  std::set<ComponentKey> keys;
  for (const auto& component : product.components) keys.insert(component_key(product, component.name));
  return keys;
}

SharingLattice::SharingLattice(const std::vector<ProductGraph>& products) {
  if (products.size() > 64) {
    throw Error(Errc::too_many_products, "at most 64 products per analysis");
  }
  for (std::size_t i = 0; i < products.size(); ++i) {
    ids_.push_back(products[i].product_id);
    for (const auto& key : product_keys(products[i])) {
      membership_[key] |= std::uint64_t{1} << i;
    }
  }
}

std::uint64_t SharingLattice::subset_mask(const ProductSubset& subset) const {
  if (subset.empty()) throw Error(Errc::empty_subset, "product subset must not be empty");
  std::uint64_t mask = 0;
  for (std::size_t index : subset) {
    if (index >= ids_.size()) {
      throw Error(Errc::bad_index, "product index " + std::to_string(index) + " out of range");
    }
    mask |= std::uint64_t{1} << index;
  }
  return mask;
}

std::set<ComponentKey> SharingLattice::shared_by_all(const ProductSubset& subset) const {
  const std::uint64_t mask = subset_mask(subset);
  std::set<ComponentKey> keys;
  for (const auto& [key, present] : membership_) {
    if ((present & mask) == mask) keys.insert(key);
  }
  return keys;
}

std::set<ComponentKey> SharingLattice::exclusive_region(const ProductSubset& subset) const {
  const std::uint64_t mask = subset_mask(subset);
  std::set<ComponentKey> keys;
  for (const auto& [key, present] : membership_) {
    if (present == mask) keys.insert(key);
  }
  return keys;
}

std::map<ProductSubset, std::set<ComponentKey>> SharingLattice::exact_regions() const {
  std::map<ProductSubset, std::set<ComponentKey>> regions;
  for (const auto& [key, present] : membership_) {
    ProductSubset subset;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (present & (std::uint64_t{1} << i)) subset.insert(i);
    }
    regions[subset].insert(key);
  }
  return regions;
}

std::set<ComponentKey> shared_by_all(const std::vector<ProductGraph>& products,
                                     const ProductSubset& subset) {
  return SharingLattice(products).shared_by_all(subset);
}

std::set<ComponentKey> exclusive_region(const std::vector<ProductGraph>& products,
                                        const ProductSubset& subset) {
  return SharingLattice(products).exclusive_region(subset);
}

}  // namespace plab
