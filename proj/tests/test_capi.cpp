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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "plab.h"

namespace {

#ifndef PLAB_FIXTURE_DIR
#define PLAB_FIXTURE_DIR "fixtures"
#endif

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(PLAB_FIXTURE_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

plab_products* parse_one(const std::string& text, int strict = 0) {
  const char* texts[] = {text.c_str()};
  plab_products* products = nullptr;
  REQUIRE(plab_parse(texts, nullptr, 1, strict, &products) == PLAB_OK);
  REQUIRE(products != nullptr);
  return products;
}

}  // namespace

TEST_CASE("version and default options") {
  CHECK(plab_version() != nullptr);
  plab_options options;
  plab_options_init(&options);
  CHECK(options.tau_ir == doctest::Approx(0.5));
  CHECK(options.tau_prr == doctest::Approx(0.25));
  CHECK(options.tau_iprr == doctest::Approx(0.25));
  CHECK(options.strict == 0);
}

TEST_CASE("null arguments are rejected with PLAB_ERR_ARGUMENT") {
  CHECK(plab_parse(nullptr, nullptr, 0, 0, nullptr) == PLAB_ERR_ARGUMENT);
  CHECK(plab_serialize(nullptr, nullptr) == PLAB_ERR_ARGUMENT);
  CHECK(plab_analyze(nullptr, nullptr, nullptr) == PLAB_ERR_ARGUMENT);
  CHECK(std::string(plab_last_error()).size() > 0);
}

TEST_CASE("parsing a fixture exposes products and diagnostics") {
  const std::string text = read_fixture("door_ecu.plp");
  plab_products* products = parse_one(text);
  CHECK(plab_products_ok(products) == 1);
  REQUIRE(plab_products_count(products) == 3);
  CHECK(std::string(plab_product_id(products, 0)) == "p1");
  CHECK(std::string(plab_product_id(products, 2)) == "p3");
  CHECK(plab_product_id(products, 9) == nullptr);
  CHECK(plab_diags_count(plab_products_diags(products)) == 0);
  plab_products_free(products);
}

TEST_CASE("parse errors still yield a handle with diagnostics") {
  const std::string text = "product p\nedge A -> B {}";
  const char* texts[] = {text.c_str()};
  const char* names[] = {"broken.plp"};
  plab_products* products = nullptr;
  CHECK(plab_parse(texts, names, 1, 0, &products) == PLAB_ERR_INPUT);
  REQUIRE(products != nullptr);
  CHECK(plab_products_ok(products) == 0);
  CHECK(plab_products_count(products) == 0);

  const plab_diags* diags = plab_products_diags(products);
  REQUIRE(plab_diags_count(diags) >= 2);
  bool found = false;
  for (size_t i = 0; i < plab_diags_count(diags); ++i) {
    plab_severity severity = PLAB_SEVERITY_WARNING;
    const char* source = nullptr;
    int line = 0;
    const char* code = nullptr;
    const char* message = nullptr;
    REQUIRE(plab_diags_get(diags, i, &severity, &source, &line, &code, &message) == PLAB_OK);
    CHECK(std::string(source) == "broken.plp");
    if (std::string(code) == "E_UNKNOWN_COMPONENT") {
      found = true;
      CHECK(severity == PLAB_SEVERITY_ERROR);
      CHECK(line == 2);
      CHECK(std::string(message).find("undeclared") != std::string::npos);
    }
  }
  CHECK(found);
  plab_products_free(products);
}

TEST_CASE("serialization round trips through the C API") {
  const std::string text = read_fixture("fig2.plp");
  plab_products* products = parse_one(text);
  char* serialized = nullptr;
  REQUIRE(plab_serialize(products, &serialized) == PLAB_OK);
  REQUIRE(serialized != nullptr);

  plab_products* reparsed = parse_one(serialized);
  char* again = nullptr;
  REQUIRE(plab_serialize(reparsed, &again) == PLAB_OK);
  CHECK(std::string(serialized) == again);

  plab_string_free(serialized);
  plab_string_free(again);
  plab_products_free(reparsed);
  plab_products_free(products);
}

TEST_CASE("classification through the C API") {
  plab_products* products = parse_one(read_fixture("fig2.plp"));
  plab_classification* classification = nullptr;
  REQUIRE(plab_classify(products, 0, nullptr, 0, &classification) == PLAB_OK);

  std::vector<std::string> required;
  for (size_t i = 0; i < plab_classification_count(classification, PLAB_CLASS_REQUIRED); ++i) {
    required.push_back(plab_classification_name(classification, PLAB_CLASS_REQUIRED, i));
  }
  CHECK(required == std::vector<std::string>{"K", "L", "M", "Q", "R"});
  CHECK(plab_classification_count(classification, PLAB_CLASS_OPTIONAL) == 1);
  CHECK(std::string(plab_classification_name(classification, PLAB_CLASS_OPTIONAL, 0)) == "P");
  CHECK(plab_classification_count(classification, PLAB_CLASS_ISOLATED) == 0);
  plab_classification_free(classification);

  // start override
  const char* override_names[] = {"P"};
  REQUIRE(plab_classify(products, 0, override_names, 1, &classification) == PLAB_OK);
  CHECK(plab_classification_count(classification, PLAB_CLASS_REQUIRED) == 1);
  plab_classification_free(classification);

  // unknown override name is a precondition failure
  const char* bogus[] = {"nope"};
  plab_classification* failed = nullptr;
  CHECK(plab_classify(products, 0, bogus, 1, &failed) == PLAB_ERR_PRECONDITION);
  CHECK(failed == nullptr);

  plab_products_free(products);
}

TEST_CASE("validation through the C API") {
  plab_products* products = parse_one("product p\ncomponent X\ncomponent Y\nedge X -> Y {}");
  plab_diags* diags = nullptr;
  REQUIRE(plab_validate(products, 0, &diags) == PLAB_OK);
  bool saw_basis_error = false;
  for (size_t i = 0; i < plab_diags_count(diags); ++i) {
    const char* code = nullptr;
    plab_diags_get(diags, i, nullptr, nullptr, nullptr, &code, nullptr);
    if (std::string(code) == "E_NO_CLASSIFICATION_BASIS") saw_basis_error = true;
  }
  CHECK(saw_basis_error);
  plab_diags_free(diags);
  plab_products_free(products);
}

TEST_CASE("analysis and rendering through the C API") {
  plab_products* products = parse_one(read_fixture("door_ecu.plp"));
  plab_report* report = nullptr;
  REQUIRE(plab_analyze(products, nullptr, &report) == PLAB_OK);

  unsigned long long num = 0;
  unsigned long long den = 0;
  int defined = 0;
  REQUIRE(plab_report_metric(report, PLAB_METRIC_SOC, 0, 0, &num, &den, &defined) == PLAB_OK);
  CHECK(defined == 1);
  CHECK(num == 2);

  REQUIRE(plab_report_metric(report, PLAB_METRIC_IOC, 0, 0, &num, &den, &defined) == PLAB_OK);
  CHECK(num == 1);
  CHECK(den == 2);

  REQUIRE(plab_report_metric(report, PLAB_METRIC_PRR, 2, 0, &num, &den, &defined) == PLAB_OK);
  CHECK(num == 2);
  CHECK(den == 6);

  REQUIRE(plab_report_metric(report, PLAB_METRIC_RR, 0, 2, &num, &den, &defined) == PLAB_OK);
  CHECK(num == 4);
  CHECK(den == 6);

  // pair order does not matter
  REQUIRE(plab_report_metric(report, PLAB_METRIC_RR, 2, 0, &num, &den, &defined) == PLAB_OK);
  CHECK(num == 4);

  CHECK(plab_report_metric(report, PLAB_METRIC_PRR, 11, 0, &num, &den, &defined) ==
        PLAB_ERR_ARGUMENT);

  for (plab_format format : {PLAB_FORMAT_TEXT, PLAB_FORMAT_JSON, PLAB_FORMAT_DOT}) {
    char* text = nullptr;
    REQUIRE(plab_report_render(report, format, &text) == PLAB_OK);
    REQUIRE(text != nullptr);
    CHECK(std::string(text).size() > 0);
    plab_string_free(text);
  }

  plab_report_free(report);
  plab_products_free(products);
}

TEST_CASE("analysis of a single product is a precondition failure") {
  plab_products* products = parse_one(read_fixture("fig2.plp"));
  plab_report* report = nullptr;
  CHECK(plab_analyze(products, nullptr, &report) == PLAB_ERR_PRECONDITION);
  CHECK(report == nullptr);
  CHECK(std::string(plab_last_error()).find("2 products") != std::string::npos);
  plab_products_free(products);
}

TEST_CASE("undefined pairwise metrics read back as undefined") {
  plab_products* products = parse_one("product a\ncomponent X\nstart X\nproduct b\ncomponent Y\nstart Y");
  plab_report* report = nullptr;
  REQUIRE(plab_analyze(products, nullptr, &report) == PLAB_OK);
  unsigned long long num = 7;
  unsigned long long den = 7;
  int defined = 1;
  REQUIRE(plab_report_metric(report, PLAB_METRIC_RB, 0, 1, &num, &den, &defined) == PLAB_OK);
  CHECK(defined == 0);
  plab_report_free(report);
  plab_products_free(products);
}

TEST_CASE("multi-stream parse through the C API") {
  const std::string a = "product a\ncomponent X\nstart X";
  const std::string b = "product b\ncomponent X\nstart X";
  const char* texts[] = {a.c_str(), b.c_str()};
  const char* names[] = {"a.plp", "b.plp"};
  plab_products* products = nullptr;
  REQUIRE(plab_parse(texts, names, 2, 0, &products) == PLAB_OK);
  CHECK(plab_products_count(products) == 2);
  plab_report* report = nullptr;
  CHECK(plab_analyze(products, nullptr, &report) == PLAB_OK);
  plab_report_free(report);
  plab_products_free(products);
}
