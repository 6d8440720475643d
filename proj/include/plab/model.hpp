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

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Domain vocabulary shared by every other module: message signatures,
// components, annotated dependency edges, whole products, classification
// results, and exact ratio values. All types are immutable values once
// built; construction rules are enforced by the parser.

namespace plab {

enum class Errc {
  bad_index,
  same_product,
  empty_subset,
  too_few_products,
  too_many_products,
  unknown_component,
  start_not_found,
  no_classification_basis,
  invalid_signature,
  validation_failed,
  io,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

/// A payload type: NAT, INT, REAL, or a named domain type.
struct TypeTag {
  enum class Kind { Nat, Int, Real, Named };

  Kind kind = Kind::Nat;
  std::string name;  // non-empty iff kind == Named

  static TypeTag nat() { return {Kind::Nat, {}}; }
  static TypeTag integer() { return {Kind::Int, {}}; }
  static TypeTag real() { return {Kind::Real, {}}; }
  static TypeTag named(std::string n) { return {Kind::Named, std::move(n)}; }

  auto operator<=>(const TypeTag&) const = default;
};

std::string to_string(const TypeTag& type);

struct SignatureField {
  std::string id;
  TypeTag type;

  auto operator<=>(const SignatureField&) const = default;
};

/// A message payload: a set of (field-id, type) pairs. Field ids are unique
/// within one signature; the empty signature is a plain call.
class MessageSignature {
public:
  MessageSignature() = default;

  /// Normalizes field order; throws Error(invalid_signature) on a duplicate
  /// field id.
  explicit MessageSignature(std::vector<SignatureField> fields);

  const std::vector<SignatureField>& fields() const { return fields_; }
  bool empty() const { return fields_.empty(); }

  auto operator<=>(const MessageSignature&) const = default;

private:
  std::vector<SignatureField> fields_;  // sorted by field id
};

std::string to_string(const MessageSignature& signature);

/// One node of a product's dependency graph. declared_accepts is the set of
/// message signatures the component declares it can receive; it may be empty.
struct Component {
  std::string name;
  std::vector<MessageSignature> declared_accepts;  // sorted, unique

  int line = 0;  // source provenance; not part of the value
};

bool operator==(const Component& a, const Component& b);
bool operator<(const Component& a, const Component& b);

enum class Optionality { Required, Optional };

/// A directed, annotated dependency between two components of one product.
struct DependencyEdge {
  std::string source;
  std::string target;
  MessageSignature signature;
  Optionality optionality = Optionality::Required;

  int line = 0;  // source provenance; not part of the value
};

bool operator==(const DependencyEdge& a, const DependencyEdge& b);
bool operator<(const DependencyEdge& a, const DependencyEdge& b);

/// One product: components, annotated edges, the start set used as the
/// classification basis, and an optional declared classification.
struct ProductGraph {
  std::string product_id;
  std::vector<Component> components;       // sorted by name, unique
  std::vector<DependencyEdge> edges;       // sorted, unique (source, target, signature)
  std::vector<std::string> start_set;      // sorted, unique, subset of component names
  std::map<std::string, Optionality> declared_classification;

  // Source provenance; not part of the value.
  std::string source;
  int line = 0;
  std::map<std::string, int> classify_lines;

  bool has_component(const std::string& name) const;
  const Component* find_component(const std::string& name) const;
  std::set<std::string> component_names() const;
};

bool operator==(const ProductGraph& a, const ProductGraph& b);
inline bool operator!=(const ProductGraph& a, const ProductGraph& b) { return !(a == b); }

/// Sorts and dedupes all member containers. Parser output is already
/// canonical; this is for programmatically built products.
void canonicalize(ProductGraph& product);

/// Partition of a product's components into required and optional, plus the
/// isolated components reported for manual review.
struct Classification {
  std::set<std::string> required;
  std::set<std::string> optional;
  std::set<std::string> isolated;

  bool operator==(const Classification&) const = default;
};

/// An exact metric value: either a non-negative rational or Undefined (the
/// zero-denominator case, where a comparison is not meaningful). Values are
/// kept as computed, without reduction; comparison is exact.
class Ratio {
public:
  Ratio() = default;  // the Undefined value
  static Ratio defined(std::uint64_t num, std::uint64_t den);
  static Ratio undefined() { return Ratio(); }

  bool is_defined() const { return defined_; }
  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }

  /// Approximate value; only meaningful when defined.
  double value() const;

  /// Two decimals, half-up ("0.29"); "n/a" when undefined.
  std::string decimal2() const;

  friend bool operator==(const Ratio& a, const Ratio& b);
  friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }

  /// Exact order between two defined ratios.
  static bool less(const Ratio& a, const Ratio& b);

private:
  bool defined_ = false;
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

std::string to_string(const Ratio& ratio);

}  // namespace plab
