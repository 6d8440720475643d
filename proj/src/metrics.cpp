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

#include "plab/metrics.hpp"

#include <algorithm>

namespace plab {

namespace {

std::uint64_t full_mask(std::size_t count) {
  return count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

std::size_t count_members(const SharingLattice& lattice, std::uint64_t wanted) {
  std::size_t count = 0;
  for (const auto& [key, present] : lattice.membership()) {
    if ((present & wanted) == wanted) ++count;
  }
  return count;
}

}  // namespace

ProductSetAnalysis::ProductSetAnalysis(std::vector<ProductGraph> products,
                                       std::vector<Classification> classifications)
    : products_(std::move(products)),
      classifications_(std::move(classifications)),
      lattice_(products_) {
  if (products_.size() < 2) {
    throw Error(Errc::too_few_products, "metric evaluation needs at least 2 products");
  }
  if (products_.size() != classifications_.size()) {
    throw Error(Errc::bad_index, "one classification per product required");
  }
  for (std::size_t i = 0; i < products_.size(); ++i) {
    std::set<ComponentKey> all;
    std::set<ComponentKey> required;
    std::set<ComponentKey> optional;
    for (const auto& component : products_[i].components) {
      ComponentKey key = component_key(products_[i], component.name);
      if (classifications_[i].required.count(component.name)) required.insert(key);
      else optional.insert(key);
      all.insert(std::move(key));
    }
    keys_.push_back(std::move(all));
    required_keys_.push_back(std::move(required));
    optional_keys_.push_back(std::move(optional));
  }
}

void ProductSetAnalysis::check_index(std::size_t index) const {
  if (index >= products_.size()) {
    throw Error(Errc::bad_index, "product index " + std::to_string(index) + " out of range");
  }
}

const ProductGraph& ProductSetAnalysis::product(std::size_t index) const {
  check_index(index);
  return products_[index];
}

const Classification& ProductSetAnalysis::classification(std::size_t index) const {
  check_index(index);
  return classifications_[index];
}

const std::set<ComponentKey>& ProductSetAnalysis::keys(std::size_t index) const {
  check_index(index);
  return keys_[index];
}

const std::set<ComponentKey>& ProductSetAnalysis::required_keys(std::size_t index) const {
  check_index(index);
  return required_keys_[index];
}

const std::set<ComponentKey>& ProductSetAnalysis::optional_keys(std::size_t index) const {
  check_index(index);
  return optional_keys_[index];
}

std::size_t size_of_commonality(const ProductSetAnalysis& analysis) {
  return count_members(analysis.lattice(), full_mask(analysis.product_count()));
}

std::vector<StatusConflict> commonality_consistency_check(const ProductSetAnalysis& analysis) {
  const std::uint64_t everyone = full_mask(analysis.product_count());
  std::vector<StatusConflict> conflicts;
  for (const auto& [key, present] : analysis.lattice().membership()) {
    if ((present & everyone) != everyone) continue;
    StatusConflict conflict;
    conflict.key = key;
    for (std::size_t i = 0; i < analysis.product_count(); ++i) {
      if (analysis.required_keys(i).count(key)) conflict.required_in.push_back(analysis.product_ids()[i]);
      else conflict.optional_in.push_back(analysis.product_ids()[i]);
    }
    if (!conflict.required_in.empty() && !conflict.optional_in.empty()) {
      conflicts.push_back(std::move(conflict));
    }
  }
  return conflicts;
}

namespace {

std::size_t common_required_count(const ProductSetAnalysis& analysis) {
  std::size_t count = 0;
  for (const auto& key : analysis.required_keys(0)) {
    bool everywhere = true;
    for (std::size_t i = 1; i < analysis.product_count() && everywhere; ++i) {
      everywhere = analysis.required_keys(i).count(key) > 0;
    }
    if (everywhere) ++count;
  }
  return count;
}

std::size_t intersection_size(const std::set<ComponentKey>& a, const std::set<ComponentKey>& b) {
  std::size_t count = 0;
  for (const auto& key : a) count += b.count(key);
  return count;
}

}  // namespace

Ratio impact_of_commonality(const ProductSetAnalysis& analysis) {
  const std::size_t soc = size_of_commonality(analysis);
  if (soc == 0) return Ratio::undefined();
  return Ratio::defined(common_required_count(analysis), soc);
}

Ratio product_related_reusability(const ProductSetAnalysis& analysis, std::size_t index) {
  return Ratio::defined(size_of_commonality(analysis), analysis.keys(index).size());
}

Ratio impact_of_product_related_reusability(const ProductSetAnalysis& analysis, std::size_t index) {
  const std::size_t own_required = analysis.required_keys(index).size();
  if (own_required == 0) return Ratio::undefined();
  return Ratio::defined(common_required_count(analysis), own_required);
}

Ratio reusability_benefit(const ProductSetAnalysis& analysis, std::size_t i, std::size_t j) {
  if (i == j) throw Error(Errc::same_product, "pairwise metric needs two distinct products");
  const std::size_t shared = intersection_size(analysis.keys(i), analysis.keys(j));
  if (shared == 0) return Ratio::undefined();
  return Ratio::defined(size_of_commonality(analysis), shared);
}

Ratio relationship_ratio(const ProductSetAnalysis& analysis, std::size_t i, std::size_t j) {
  if (i == j) throw Error(Errc::same_product, "pairwise metric needs two distinct products");
  const std::size_t shared = intersection_size(analysis.keys(i), analysis.keys(j));
  const std::size_t united = analysis.keys(i).size() + analysis.keys(j).size() - shared;
  return Ratio::defined(shared, united);
}

Ratio individualization_ratio(const ProductSetAnalysis& analysis, std::size_t index) {
  const std::set<ComponentKey>& own = analysis.keys(index);
  std::size_t exclusive = 0;
  for (const auto& key : own) {
    bool elsewhere = false;
    for (std::size_t k = 0; k < analysis.product_count() && !elsewhere; ++k) {
      elsewhere = k != index && analysis.keys(k).count(key) > 0;
    }
    if (!elsewhere) ++exclusive;
  }
  return Ratio::defined(exclusive, own.size());
}

}  // namespace plab
