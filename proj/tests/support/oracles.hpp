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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plab/model.hpp"

// Brute-force reference computations, deliberately independent of the
// library's identity/lattice/metric code paths: keys are rebuilt from raw
// graph data as string sets, classification is a naive fixpoint iteration,
// and every metric is evaluated from a plain membership table.

namespace plab::test {

/// Required-edge connectivity by exhaustive fixpoint iteration (no graph
/// traversal; scans the full edge list until nothing changes).
inline std::set<std::string> oracle_required_closure(const ProductGraph& product,
                                                     const std::set<std::string>& seeds) {
  std::set<std::string> reached = seeds;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& edge : product.edges) {
      if (edge.optionality != Optionality::Required) continue;
      if (reached.count(edge.source) && !reached.count(edge.target)) {
        reached.insert(edge.target);
        changed = true;
      }
      if (reached.count(edge.target) && !reached.count(edge.source)) {
        reached.insert(edge.source);
        changed = true;
      }
    }
  }
  return reached;
}

/// Identity key rebuilt from raw data: name plus the rendered set of
/// declared-accept and incoming-edge signatures.
struct OracleKey {
  std::string name;
  std::set<std::string> interface;

  auto operator<=>(const OracleKey&) const = default;
};

inline OracleKey oracle_key(const ProductGraph& product, const std::string& name) {
  OracleKey key{name, {}};
  const Component* component = product.find_component(name);
  if (component != nullptr) {
    for (const auto& signature : component->declared_accepts) key.interface.insert(to_string(signature));
  }
  for (const auto& edge : product.edges) {
    if (edge.target == name) key.interface.insert(to_string(edge.signature));
  }
  return key;
}

inline std::set<OracleKey> oracle_keys(const ProductGraph& product) {
  std::set<OracleKey> keys;
  for (const auto& component : product.components) keys.insert(oracle_key(product, component.name));
  return keys;
}

/// Per-key presence and status across a classified product set.
struct MembershipTable {
  std::vector<OracleKey> keys;               // all distinct keys, sorted
  std::vector<std::vector<bool>> present;    // [key][product]
  std::vector<std::vector<bool>> required_;  // [key][product], only meaningful when present
};

inline MembershipTable build_membership_table(const std::vector<ProductGraph>& products,
                                              const std::vector<Classification>& classifications) {
  MembershipTable table;
  std::set<OracleKey> all;
  for (const auto& product : products) {
    for (const auto& key : oracle_keys(product)) all.insert(key);
  }
  table.keys.assign(all.begin(), all.end());
  table.present.assign(table.keys.size(), std::vector<bool>(products.size(), false));
  table.required_.assign(table.keys.size(), std::vector<bool>(products.size(), false));
  for (std::size_t k = 0; k < table.keys.size(); ++k) {
    for (std::size_t p = 0; p < products.size(); ++p) {
      for (const auto& component : products[p].components) {
        if (oracle_key(products[p], component.name) == table.keys[k]) {
          table.present[k][p] = true;
          table.required_[k][p] = classifications[p].required.count(component.name) > 0;
        }
      }
    }
  }
  return table;
}

// Exact rational as (num, den); nullopt is the undefined value.
using OracleRatio = std::optional<std::pair<std::uint64_t, std::uint64_t>>;

inline std::size_t oracle_soc(const MembershipTable& table) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < table.keys.size(); ++k) {
    bool everywhere = true;
    for (bool p : table.present[k]) everywhere = everywhere && p;
    if (everywhere) ++count;
  }
  return count;
}

inline std::size_t oracle_common_required(const MembershipTable& table) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < table.keys.size(); ++k) {
    bool everywhere = true;
    for (std::size_t p = 0; p < table.present[k].size(); ++p) {
      everywhere = everywhere && table.present[k][p] && table.required_[k][p];
    }
    if (everywhere) ++count;
  }
  return count;
}

inline std::size_t oracle_product_size(const MembershipTable& table, std::size_t i) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < table.keys.size(); ++k) count += table.present[k][i];
  return count;
}

inline std::size_t oracle_required_size(const MembershipTable& table, std::size_t i) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < table.keys.size(); ++k) {
    count += table.present[k][i] && table.required_[k][i];
  }
  return count;
}

inline std::size_t oracle_pair_intersection(const MembershipTable& table, std::size_t i, std::size_t j) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < table.keys.size(); ++k) count += table.present[k][i] && table.present[k][j];
  return count;
}

inline OracleRatio oracle_ioc(const MembershipTable& table) {
  const std::size_t soc = oracle_soc(table);
  if (soc == 0) return std::nullopt;
  return std::make_pair(oracle_common_required(table), soc);
}

inline OracleRatio oracle_prr(const MembershipTable& table, std::size_t i) {
  return std::make_pair(oracle_soc(table), oracle_product_size(table, i));
}

inline OracleRatio oracle_iprr(const MembershipTable& table, std::size_t i) {
  const std::size_t own = oracle_required_size(table, i);
  if (own == 0) return std::nullopt;
  return std::make_pair(oracle_common_required(table), own);
}

inline OracleRatio oracle_rb(const MembershipTable& table, std::size_t i, std::size_t j) {
  const std::size_t shared = oracle_pair_intersection(table, i, j);
  if (shared == 0) return std::nullopt;
  return std::make_pair(oracle_soc(table), shared);
}

inline OracleRatio oracle_rr(const MembershipTable& table, std::size_t i, std::size_t j) {
  const std::size_t shared = oracle_pair_intersection(table, i, j);
  const std::size_t united =
      oracle_product_size(table, i) + oracle_product_size(table, j) - shared;
  return std::make_pair(shared, united);
}

inline OracleRatio oracle_ir(const MembershipTable& table, std::size_t i) {
  std::size_t exclusive = 0;
  for (std::size_t k = 0; k < table.keys.size(); ++k) {
    if (!table.present[k][i]) continue;
    bool elsewhere = false;
    for (std::size_t p = 0; p < table.present[k].size(); ++p) {
      elsewhere = elsewhere || (p != i && table.present[k][p]);
    }
    if (!elsewhere) ++exclusive;
  }
  return std::make_pair(exclusive, oracle_product_size(table, i));
}

/// Shared keys whose status differs across products (they are present
/// everywhere by construction of the check).
inline std::size_t oracle_status_conflicts(const MembershipTable& table) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < table.keys.size(); ++k) {
    bool everywhere = true;
    bool any_required = false;
    bool any_optional = false;
    for (std::size_t p = 0; p < table.present[k].size(); ++p) {
      everywhere = everywhere && table.present[k][p];
      if (table.present[k][p]) {
        (table.required_[k][p] ? any_required : any_optional) = true;
      }
    }
    if (everywhere && any_required && any_optional) ++count;
  }
  return count;
}

/// Membership of every key per product, for region checks: which products
/// contain each key.
inline std::map<OracleKey, std::set<std::size_t>> oracle_membership(
    const std::vector<ProductGraph>& products) {
  std::map<OracleKey, std::set<std::size_t>> membership;
  for (std::size_t p = 0; p < products.size(); ++p) {
    for (const auto& key : oracle_keys(products[p])) membership[key].insert(p);
  }
  return membership;
}

inline bool ratio_matches(const OracleRatio& expected, const Ratio& actual) {
  if (!expected.has_value()) return !actual.is_defined();
  if (!actual.is_defined()) return false;
  return Ratio::defined(expected->first, expected->second) == actual;
}

}  // namespace plab::test
