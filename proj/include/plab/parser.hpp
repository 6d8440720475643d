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

#include <string>
#include <string_view>
#include <vector>

#include "plab/model.hpp"

// Reader and writer for the .plp product description format.
//
// The format is line oriented; '#' starts a comment, blank lines are
// ignored, LF and CRLF are both accepted (LF is emitted):
//
//   product IDENT
//   component IDENT [accepts SIG ...]
//   edge IDENT -> IDENT SIG [required|optional]
//   start IDENT ...
//   classify required|optional IDENT ...
//
//   SIG  := '{' [IDENT ':' TYPE (',' IDENT ':' TYPE)*] '}'
//   TYPE := NAT | INT | REAL | IDENT
//
// An edge without a modifier is required. Component declarations may appear
// anywhere within their product; edge, start and classify statements are
// resolved when the product ends.

namespace plab {

enum class Severity { Warning, Error };

struct ParseDiagnostic {
  Severity severity = Severity::Error;
  int line = 1;
  std::string code;
  std::string message;
  std::string source;  // stream name; empty for single anonymous input

  bool operator==(const ParseDiagnostic&) const = default;
};

std::string to_string(const ParseDiagnostic& diagnostic);

// Diagnostic codes.
namespace diag {
inline constexpr const char* syntax = "E_SYNTAX";
inline constexpr const char* dup_component = "E_DUP_COMPONENT";
inline constexpr const char* unknown_component = "E_UNKNOWN_COMPONENT";
inline constexpr const char* dup_edge = "E_DUP_EDGE";
inline constexpr const char* self_loop = "E_SELF_LOOP";
inline constexpr const char* no_product = "E_NO_PRODUCT";
inline constexpr const char* no_classification_basis = "E_NO_CLASSIFICATION_BASIS";
inline constexpr const char* isolated = "W_ISOLATED";
inline constexpr const char* undeclared_accept = "W_UNDECLARED_ACCEPT";
inline constexpr const char* classification_mismatch = "W_CLASSIFICATION_MISMATCH";
}  // namespace diag

struct ParseResult {
  std::vector<ProductGraph> products;
  std::vector<ParseDiagnostic> diagnostics;

  /// True when no error-severity diagnostic was produced. A product that
  /// produced any error is never part of `products`.
  bool ok() const;
};

struct NamedSource {
  std::string name;
  std::string text;
};

/// Parses one product description stream. In strict mode an edge whose
/// signature is missing from the target's non-empty declared_accepts is an
/// error instead of a warning.
ParseResult parse_products(std::string_view text, bool strict = false);

/// Parses several named streams into one product set. Product ids must be
/// unique across all streams.
ParseResult parse_products(const std::vector<NamedSource>& sources, bool strict = false);

/// Canonical text form: products in input order, statements ordered
/// components / edges / start / classify, each lexicographically sorted.
/// parse_products(serialize_products(p)) reproduces p exactly.
std::string serialize_products(const std::vector<ProductGraph>& products);

/// Structural checks beyond parsing: isolated components, undeclared accept
/// signatures, missing classification basis, and declared-vs-derived
/// classification mismatches. Strict mode escalates interface and
/// classification warnings to errors.
std::vector<ParseDiagnostic> validate(const ProductGraph& product, bool strict = false);

}  // namespace plab
