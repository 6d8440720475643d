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

#include "plab/model.hpp"

#include <algorithm>

namespace plab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::bad_index: return "E_BAD_INDEX";
    case Errc::same_product: return "E_SAME_PRODUCT";
    case Errc::empty_subset: return "E_EMPTY_SUBSET";
    case Errc::too_few_products: return "E_TOO_FEW_PRODUCTS";
    case Errc::too_many_products: return "E_TOO_MANY_PRODUCTS";
    case Errc::unknown_component: return "E_UNKNOWN_COMPONENT";
    case Errc::start_not_found: return "E_START_NOT_FOUND";
    case Errc::no_classification_basis: return "E_NO_CLASSIFICATION_BASIS";
    case Errc::invalid_signature: return "E_INVALID_SIGNATURE";
    case Errc::validation_failed: return "E_VALIDATION_FAILED";
    case Errc::io: return "E_IO";
  }
  return "E_UNKNOWN";
}

std::string to_string(const TypeTag& type) {
  switch (type.kind) {
    case TypeTag::Kind::Nat: return "NAT";
    case TypeTag::Kind::Int: return "INT";
    case TypeTag::Kind::Real: return "REAL";
    case TypeTag::Kind::Named: return type.name;
  }
  return {};
}

MessageSignature::MessageSignature(std::vector<SignatureField> fields) : fields_(std::move(fields)) {
  std::sort(fields_.begin(), fields_.end());
  for (std::size_t i = 1; i < fields_.size(); ++i) {
    if (fields_[i].id == fields_[i - 1].id) {
      throw Error(Errc::invalid_signature, "duplicate field id '" + fields_[i].id + "'");
    }
  }
}

std::string to_string(const MessageSignature& signature) {
  std::string out = "{";
  bool first = true;
  for (const auto& field : signature.fields()) {
    if (!first) out += ", ";
    first = false;
    out += field.id;
    out += ':';
    out += to_string(field.type);
  }
  out += '}';
  return out;
}

bool operator==(const Component& a, const Component& b) {
  return a.name == b.name && a.declared_accepts == b.declared_accepts;
}

bool operator<(const Component& a, const Component& b) {
  if (a.name != b.name) return a.name < b.name;
  return a.declared_accepts < b.declared_accepts;
}

bool operator==(const DependencyEdge& a, const DependencyEdge& b) {
  return a.source == b.source && a.target == b.target && a.signature == b.signature &&
         a.optionality == b.optionality;
}

bool operator<(const DependencyEdge& a, const DependencyEdge& b) {
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  if (a.signature != b.signature) return a.signature < b.signature;
  return a.optionality < b.optionality;
}

bool ProductGraph::has_component(const std::string& name) const {
  return find_component(name) != nullptr;
}

const Component* ProductGraph::find_component(const std::string& name) const {
  for (const auto& component : components) {
    if (component.name == name) return &component;
  }
  return nullptr;
}

std::set<std::string> ProductGraph::component_names() const {
  std::set<std::string> names;
  for (const auto& component : components) names.insert(component.name);
  return names;
}

bool operator==(const ProductGraph& a, const ProductGraph& b) {
  return a.product_id == b.product_id && a.components == b.components && a.edges == b.edges &&
         a.start_set == b.start_set && a.declared_classification == b.declared_classification;
}

namespace {

template <typename T>
void sort_unique(std::vector<T>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

}  // namespace

void canonicalize(ProductGraph& product) {
  for (auto& component : product.components) sort_unique(component.declared_accepts);
  sort_unique(product.components);
  // edges are unique per (source, target, signature); the required variant
  // sorts first and wins
  std::sort(product.edges.begin(), product.edges.end());
  product.edges.erase(std::unique(product.edges.begin(), product.edges.end(),
                                  [](const DependencyEdge& a, const DependencyEdge& b) {
                                    return a.source == b.source && a.target == b.target &&
                                           a.signature == b.signature;
                                  }),
                      product.edges.end());
  sort_unique(product.start_set);
}

Ratio Ratio::defined(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(Errc::invalid_signature, "ratio denominator must be positive");
  Ratio ratio;
  ratio.defined_ = true;
  ratio.num_ = num;
  ratio.den_ = den;
  return ratio;
}

double Ratio::value() const {
  return defined_ ? static_cast<double>(num_) / static_cast<double>(den_) : 0.0;
}

std::string Ratio::decimal2() const {
  if (!defined_) return "n/a";
  // round(100 * num / den), half up, in exact integer arithmetic
  const auto scaled = static_cast<unsigned __int128>(num_) * 200u + den_;
  const auto rounded = static_cast<std::uint64_t>(scaled / (static_cast<unsigned __int128>(den_) * 2u));
  std::string out = std::to_string(rounded / 100);
  out += '.';
  out += static_cast<char>('0' + (rounded / 10) % 10);
  out += static_cast<char>('0' + rounded % 10);
  return out;
}

bool operator==(const Ratio& a, const Ratio& b) {
  if (a.defined_ != b.defined_) return false;
  if (!a.defined_) return true;
  return static_cast<unsigned __int128>(a.num_) * b.den_ ==
         static_cast<unsigned __int128>(b.num_) * a.den_;
}

bool Ratio::less(const Ratio& a, const Ratio& b) {
  if (!a.defined_ || !b.defined_) {
    throw Error(Errc::validation_failed, "cannot order undefined ratios");
  }
  return static_cast<unsigned __int128>(a.num_) * b.den_ <
         static_cast<unsigned __int128>(b.num_) * a.den_;
}

std::string to_string(const Ratio& ratio) {
  if (!ratio.is_defined()) return "n/a";
  return std::to_string(ratio.num()) + "/" + std::to_string(ratio.den());
}

}  // namespace plab
