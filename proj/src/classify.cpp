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

#include "plab/classify.hpp"

#include <map>
#include <vector>

namespace plab {

std::set<std::string> required_closure(const ProductGraph& product,
                                       const std::set<std::string>& seeds) {
  std::map<std::string, std::vector<const std::string*>> adjacent;
  for (const auto& edge : product.edges) {
    if (edge.optionality != Optionality::Required) continue;
    adjacent[edge.source].push_back(&edge.target);
    adjacent[edge.target].push_back(&edge.source);
  }

  std::set<std::string> visited = seeds;
  std::vector<std::string> pending(seeds.begin(), seeds.end());
  while (!pending.empty()) {
    const std::string name = std::move(pending.back());
    pending.pop_back();
    auto it = adjacent.find(name);
    if (it == adjacent.end()) continue;
    for (const std::string* next : it->second) {
      if (visited.insert(*next).second) pending.push_back(*next);
    }
  }
  return visited;
}

std::set<std::string> find_isolated(const ProductGraph& product) {
  std::set<std::string> isolated = product.component_names();
  for (const auto& edge : product.edges) {
    isolated.erase(edge.source);
    isolated.erase(edge.target);
  }
  return isolated;
}

Classification classify_components(const ProductGraph& product) {
  return classify_components(product, std::nullopt);
}

Classification classify_components(const ProductGraph& product,
                                   const std::optional<std::vector<std::string>>& start_override) {
  const std::set<std::string> names = product.component_names();

  std::set<std::string> starts;
  if (start_override) starts.insert(start_override->begin(), start_override->end());
  else starts.insert(product.start_set.begin(), product.start_set.end());
  for (const auto& name : starts) {
    if (!names.count(name)) {
      throw Error(Errc::start_not_found, "start component '" + name + "' does not exist in product '" +
                                             product.product_id + "'");
    }
  }

  Classification result;
  result.isolated = find_isolated(product);

  if (starts.empty()) {
    // No traversal basis: fall back to the declaration, which must then
    // cover every component.
    if (product.declared_classification.size() == names.size() && !names.empty()) {
      for (const auto& [name, status] : product.declared_classification) {
        if (status == Optionality::Required) result.required.insert(name);
        else result.optional.insert(name);
      }
      return result;
    }
    throw Error(Errc::no_classification_basis,
                "product '" + product.product_id +
                    "' has no start set and no complete declared classification");
  }

  std::set<std::string> seeds = starts;
  for (const auto& [name, status] : product.declared_classification) {
    if (status == Optionality::Required && names.count(name)) seeds.insert(name);
  }

  const std::set<std::string> reached = required_closure(product, seeds);
  for (const auto& name : names) {
    if (reached.count(name)) result.required.insert(name);
    else result.optional.insert(name);
  }
  return result;
}

}  // namespace plab
