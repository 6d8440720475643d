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

#include "plab/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "plab/classify.hpp"

namespace plab {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident(std::string_view text) {
  if (text.empty() || !is_ident_start(text[0])) return false;
  return std::all_of(text.begin(), text.end(), is_ident_char);
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

struct Token {
  std::string text;
  bool is_signature = false;  // text is the content between the braces
};

struct PendingEdge {
  std::string source;
  std::string target;
  MessageSignature signature;
  Optionality optionality = Optionality::Required;
  int line = 1;
};

struct PendingName {
  std::string name;
  int line = 1;
};

struct PendingClassify {
  std::string name;
  Optionality status = Optionality::Required;
  int line = 1;
};

struct ProductBuilder {
  std::string id;
  int line = 1;
  std::map<std::string, Component> components;
  std::vector<PendingEdge> edges;
  std::vector<PendingName> starts;
  std::vector<PendingClassify> classifies;
  int error_count = 0;
};

class Parser {
public:
  Parser(ParseResult& result, std::set<std::string>& seen_product_ids, bool strict)
      : result_(result), seen_product_ids_(seen_product_ids), strict_(strict) {}

  void run(std::string_view text, const std::string& source_name) {
    source_ = source_name;
    // tolerate a UTF-8 byte order mark
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    int line_no = 0;
    while (!text.empty()) {
      auto eol = text.find('\n');
      std::string_view raw = text.substr(0, eol);
      text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
      ++line_no;

      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      raw = trim(raw);
      if (raw.empty()) continue;

      std::vector<Token> tokens;
      if (!tokenize(raw, line_no, tokens)) continue;
      dispatch(tokens, line_no);
    }
    close_product();
  }

private:
  void emit(Severity severity, int line, const char* code, std::string message) {
    result_.diagnostics.push_back({severity, line, code, std::move(message), source_});
  }

  // Errors inside an open product poison it; it will not be returned.
  void error(int line, const char* code, std::string message) {
    emit(Severity::Error, line, code, std::move(message));
    if (current_) ++current_->error_count;
  }

  bool tokenize(std::string_view text, int line, std::vector<Token>& tokens) {
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '{') {
        auto close = text.find('}', i + 1);
        if (close == std::string_view::npos) {
          error(line, diag::syntax, "unterminated signature (missing '}')");
          return false;
        }
        tokens.push_back({std::string(text.substr(i + 1, close - i - 1)), true});
        i = close + 1;
      } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
        tokens.push_back({"->", false});
        i += 2;
      } else if (is_ident_start(c)) {
        std::size_t j = i;
        while (j < text.size() && is_ident_char(text[j])) ++j;
        tokens.push_back({std::string(text.substr(i, j - i)), false});
        i = j;
      } else {
        error(line, diag::syntax, std::string("unexpected character '") + c + "'");
        return false;
      }
    }
    return true;
  }

  std::optional<MessageSignature> parse_signature(const std::string& inner, int line) {
    std::vector<SignatureField> fields;
    std::string_view rest = trim(inner);
    if (!rest.empty()) {
      while (true) {
        auto comma = rest.find(',');
        std::string_view item = trim(rest.substr(0, comma));
        auto colon = item.find(':');
        if (colon == std::string_view::npos) {
          error(line, diag::syntax, "signature field must be 'id : TYPE'");
          return std::nullopt;
        }
        std::string_view id = trim(item.substr(0, colon));
        std::string_view type_text = trim(item.substr(colon + 1));
        if (!is_ident(id) || !is_ident(type_text)) {
          error(line, diag::syntax, "malformed signature field '" + std::string(item) + "'");
          return std::nullopt;
        }
        TypeTag type;
        if (type_text == "NAT") type = TypeTag::nat();
        else if (type_text == "INT") type = TypeTag::integer();
        else if (type_text == "REAL") type = TypeTag::real();
        else type = TypeTag::named(std::string(type_text));
        fields.push_back({std::string(id), type});
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    }
    try {
      return MessageSignature(std::move(fields));
    } catch (const Error& e) {
      error(line, diag::syntax, e.what());
      return std::nullopt;
    }
  }

  bool expect_ident(const Token& token, int line, const char* what) {
    if (token.is_signature || !is_ident(token.text)) {
      error(line, diag::syntax, std::string("expected ") + what + ", got '" + token.text + "'");
      return false;
    }
    return true;
  }

  void dispatch(const std::vector<Token>& tokens, int line) {
    const std::string& keyword = tokens[0].text;
    if (tokens[0].is_signature) {
      error(line, diag::syntax, "statement cannot start with a signature");
      return;
    }
    if (keyword == "product") {
      stmt_product(tokens, line);
      return;
    }
    if (!current_) {
      emit(Severity::Error, line, diag::no_product, "statement before any 'product' declaration");
      return;
    }
    if (keyword == "component") stmt_component(tokens, line);
    else if (keyword == "edge") stmt_edge(tokens, line);
    else if (keyword == "start") stmt_start(tokens, line);
    else if (keyword == "classify") stmt_classify(tokens, line);
    else error(line, diag::syntax, "unknown statement '" + keyword + "'");
  }

  void stmt_product(const std::vector<Token>& tokens, int line) {
    close_product();
    if (tokens.size() != 2 || !expect_ident(tokens[1], line, "product id")) {
      if (tokens.size() != 2) error(line, diag::syntax, "expected 'product IDENT'");
      return;
    }
    current_ = ProductBuilder{};
    current_->id = tokens[1].text;
    current_->line = line;
    if (!seen_product_ids_.insert(current_->id).second) {
      error(line, diag::syntax, "duplicate product id '" + current_->id + "'");
    }
  }

  void stmt_component(const std::vector<Token>& tokens, int line) {
    if (tokens.size() < 2 || !expect_ident(tokens[1], line, "component name")) return;
    Component component;
    component.name = tokens[1].text;
    component.line = line;
    if (tokens.size() > 2) {
      if (tokens[2].is_signature || tokens[2].text != "accepts" || tokens.size() < 4) {
        error(line, diag::syntax, "expected 'component IDENT [accepts SIG ...]'");
        return;
      }
      for (std::size_t i = 3; i < tokens.size(); ++i) {
        if (!tokens[i].is_signature) {
          error(line, diag::syntax, "'accepts' takes only signatures");
          return;
        }
        auto signature = parse_signature(tokens[i].text, line);
        if (!signature) return;
        component.declared_accepts.push_back(std::move(*signature));
      }
      std::sort(component.declared_accepts.begin(), component.declared_accepts.end());
      component.declared_accepts.erase(
          std::unique(component.declared_accepts.begin(), component.declared_accepts.end()),
          component.declared_accepts.end());
    }
    if (!current_->components.emplace(component.name, std::move(component)).second) {
      error(line, diag::dup_component, "component '" + tokens[1].text + "' already declared");
    }
  }

  void stmt_edge(const std::vector<Token>& tokens, int line) {
    if (tokens.size() < 5 || tokens.size() > 6 || tokens[2].text != "->" || !tokens[4].is_signature ||
        !expect_ident(tokens[1], line, "edge source") || !expect_ident(tokens[3], line, "edge target")) {
      if (tokens.size() < 5 || tokens.size() > 6 || tokens[2].text != "->" || !tokens[4].is_signature) {
        error(line, diag::syntax, "expected 'edge IDENT -> IDENT SIG [required|optional]'");
      }
      return;
    }
    Optionality optionality = Optionality::Required;
    if (tokens.size() == 6) {
      if (tokens[5].text == "optional") optionality = Optionality::Optional;
      else if (tokens[5].text == "required") optionality = Optionality::Required;
      else {
        error(line, diag::syntax, "edge modifier must be 'required' or 'optional'");
        return;
      }
    }
    auto signature = parse_signature(tokens[4].text, line);
    if (!signature) return;
    current_->edges.push_back({tokens[1].text, tokens[3].text, std::move(*signature), optionality, line});
  }

  void stmt_start(const std::vector<Token>& tokens, int line) {
    if (tokens.size() < 2) {
      error(line, diag::syntax, "'start' needs at least one component name");
      return;
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (!expect_ident(tokens[i], line, "component name")) return;
      current_->starts.push_back({tokens[i].text, line});
    }
  }

  void stmt_classify(const std::vector<Token>& tokens, int line) {
    if (tokens.size() < 3 || (tokens[1].text != "required" && tokens[1].text != "optional")) {
      error(line, diag::syntax, "expected 'classify required|optional IDENT ...'");
      return;
    }
    const Optionality status =
        tokens[1].text == "required" ? Optionality::Required : Optionality::Optional;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      if (!expect_ident(tokens[i], line, "component name")) return;
      current_->classifies.push_back({tokens[i].text, status, line});
    }
  }

  void close_product() {
    if (!current_) return;

    if (current_->components.empty()) {
      error(current_->line, diag::syntax, "product '" + current_->id + "' declares no components");
    }

    ProductGraph product;
    product.product_id = current_->id;
    product.line = current_->line;
    product.source = source_;
    for (auto& [name, component] : current_->components) product.components.push_back(component);

    std::set<std::tuple<std::string, std::string, MessageSignature>> edge_keys;
    for (auto& edge : current_->edges) {
      bool known = true;
      if (!current_->components.count(edge.source)) {
        error(edge.line, diag::unknown_component, "edge names undeclared component '" + edge.source + "'");
        known = false;
      }
      if (!current_->components.count(edge.target)) {
        error(edge.line, diag::unknown_component, "edge names undeclared component '" + edge.target + "'");
        known = false;
      }
      if (!known) continue;
      if (edge.source == edge.target) {
        error(edge.line, diag::self_loop, "component '" + edge.source + "' depends on itself");
        continue;
      }
      if (!edge_keys.emplace(edge.source, edge.target, edge.signature).second) {
        error(edge.line, diag::dup_edge,
              "duplicate edge " + edge.source + " -> " + edge.target + " " + to_string(edge.signature));
        continue;
      }
      product.edges.push_back({edge.source, edge.target, std::move(edge.signature), edge.optionality, edge.line});
    }
    std::sort(product.edges.begin(), product.edges.end());

    for (const auto& start : current_->starts) {
      if (!current_->components.count(start.name)) {
        error(start.line, diag::unknown_component, "start names undeclared component '" + start.name + "'");
        continue;
      }
      product.start_set.push_back(start.name);
    }
    std::sort(product.start_set.begin(), product.start_set.end());
    product.start_set.erase(std::unique(product.start_set.begin(), product.start_set.end()),
                            product.start_set.end());

    for (const auto& entry : current_->classifies) {
      if (!current_->components.count(entry.name)) {
        error(entry.line, diag::unknown_component, "classify names undeclared component '" + entry.name + "'");
        continue;
      }
      auto [it, inserted] = product.declared_classification.emplace(entry.name, entry.status);
      if (!inserted && it->second != entry.status) {
        error(entry.line, diag::syntax, "conflicting classification for '" + entry.name + "'");
        continue;
      }
      product.classify_lines.emplace(entry.name, entry.line);
    }

    // Interface check: an edge must send something its target declares, when
    // the target declares anything at all.
    for (const auto& edge : product.edges) {
      const Component* target = product.find_component(edge.target);
      if (target == nullptr || target->declared_accepts.empty()) continue;
      if (!std::binary_search(target->declared_accepts.begin(), target->declared_accepts.end(),
                              edge.signature)) {
        if (strict_) {
          error(edge.line, diag::undeclared_accept,
                "edge signature " + to_string(edge.signature) + " is not accepted by '" + edge.target + "'");
        } else {
          emit(Severity::Warning, edge.line, diag::undeclared_accept,
               "edge signature " + to_string(edge.signature) + " is not accepted by '" + edge.target + "'");
        }
      }
    }

    const bool keep = current_->error_count == 0;
    current_.reset();
    if (keep) result_.products.push_back(std::move(product));
  }

  ParseResult& result_;
  std::set<std::string>& seen_product_ids_;
  bool strict_;
  std::string source_;
  std::optional<ProductBuilder> current_;
};

}  // namespace

std::string to_string(const ParseDiagnostic& diagnostic) {
  std::string out = diagnostic.source.empty() ? "input" : diagnostic.source;
  out += ':';
  out += std::to_string(diagnostic.line);
  out += diagnostic.severity == Severity::Error ? ": error " : ": warning ";
  out += diagnostic.code;
  out += ": ";
  out += diagnostic.message;
  return out;
}

bool ParseResult::ok() const {
  return std::none_of(diagnostics.begin(), diagnostics.end(),
                      [](const ParseDiagnostic& d) { return d.severity == Severity::Error; });
}

ParseResult parse_products(std::string_view text, bool strict) {
  ParseResult result;
  std::set<std::string> seen_ids;
  Parser(result, seen_ids, strict).run(text, "");
  return result;
}

ParseResult parse_products(const std::vector<NamedSource>& sources, bool strict) {
  ParseResult result;
  std::set<std::string> seen_ids;
  for (const auto& source : sources) {
    Parser(result, seen_ids, strict).run(source.text, source.name);
  }
  return result;
}

std::string serialize_products(const std::vector<ProductGraph>& products) {
  std::string out;
  bool first = true;
  for (const ProductGraph& original : products) {
    ProductGraph product = original;
    canonicalize(product);

    if (!first) out += '\n';
    first = false;

    out += "product " + product.product_id + "\n";
    for (const auto& component : product.components) {
      out += "component " + component.name;
      if (!component.declared_accepts.empty()) {
        out += " accepts";
        for (const auto& signature : component.declared_accepts) out += ' ' + to_string(signature);
      }
      out += '\n';
    }
    for (const auto& edge : product.edges) {
      out += "edge " + edge.source + " -> " + edge.target + ' ' + to_string(edge.signature);
      if (edge.optionality == Optionality::Optional) out += " optional";
      out += '\n';
    }
    if (!product.start_set.empty()) {
      out += "start";
      for (const auto& name : product.start_set) out += ' ' + name;
      out += '\n';
    }
    for (Optionality status : {Optionality::Required, Optionality::Optional}) {
      std::string names;
      for (const auto& [name, declared] : product.declared_classification) {
        if (declared == status) names += ' ' + name;
      }
      if (!names.empty()) {
        out += status == Optionality::Required ? "classify required" : "classify optional";
        out += names + '\n';
      }
    }
  }
  return out;
}

std::vector<ParseDiagnostic> validate(const ProductGraph& product, bool strict) {
  std::vector<ParseDiagnostic> diagnostics;
  const auto at = [&](int line) { return line > 0 ? line : 1; };
  const auto add = [&](Severity severity, int line, const char* code, std::string message) {
    diagnostics.push_back({severity, at(line), code, std::move(message), product.source});
  };

  const std::set<std::string> isolated = find_isolated(product);
  for (const auto& component : product.components) {
    if (isolated.count(component.name)) {
      add(Severity::Warning, component.line, diag::isolated,
          "component '" + component.name + "' has no dependency edges; review its relevance manually");
    }
  }

  for (const auto& edge : product.edges) {
    const Component* target = product.find_component(edge.target);
    if (target == nullptr || target->declared_accepts.empty()) continue;
    if (std::find(target->declared_accepts.begin(), target->declared_accepts.end(), edge.signature) ==
        target->declared_accepts.end()) {
      add(strict ? Severity::Error : Severity::Warning, edge.line, diag::undeclared_accept,
          "edge signature " + to_string(edge.signature) + " is not accepted by '" + edge.target + "'");
    }
  }

  if (product.start_set.empty()) {
    if (product.declared_classification.empty()) {
      add(Severity::Error, product.line, diag::no_classification_basis,
          "product '" + product.product_id + "' has neither a start set nor a declared classification");
    } else if (product.declared_classification.size() != product.components.size()) {
      add(Severity::Error, product.line, diag::no_classification_basis,
          "product '" + product.product_id +
              "' has no start set and its declared classification does not cover every component");
    }
  } else if (!product.declared_classification.empty()) {
    bool starts_ok = true;
    for (const auto& name : product.start_set) {
      if (!product.has_component(name)) starts_ok = false;
    }
    if (starts_ok) {
      // Compare the declaration against the traversal seeded by the start
      // set alone; the declaration itself must not seed this derivation.
      const std::set<std::string> derived =
          required_closure(product, {product.start_set.begin(), product.start_set.end()});
      for (const auto& [name, status] : product.declared_classification) {
        const bool declared_required = status == Optionality::Required;
        const bool derived_required = derived.count(name) > 0;
        if (declared_required != derived_required) {
          int line = 1;
          if (auto it = product.classify_lines.find(name); it != product.classify_lines.end()) {
            line = it->second;
          }
          add(strict ? Severity::Error : Severity::Warning, line, diag::classification_mismatch,
              "component '" + name + "' declared " + (declared_required ? "required" : "optional") +
                  " but derived " + (derived_required ? "required" : "optional"));
        }
      }
    }
  }

  return diagnostics;
}

}  // namespace plab
