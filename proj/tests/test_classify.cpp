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

#include <doctest.h>

#include "plab/classify.hpp"
#include "plab/parser.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

using namespace plab;
using namespace plab::test;

TEST_CASE("fig2 fixture: start Q reaches K, L, M, Q, R; P stays optional") {
  const auto products = parse_fixture("fig2.plp");
  const Classification c = classify_components(products[0]);
  CHECK(c.required == std::set<std::string>{"K", "L", "M", "Q", "R"});
  CHECK(c.optional == std::set<std::string>{"P"});
  CHECK(c.isolated.empty());
}

TEST_CASE("single edge-free component in the start set") {
  const auto r = parse_products("product p\ncomponent X\nstart X");
  REQUIRE(r.ok());
  const Classification c = classify_components(r.products[0]);
  CHECK(c.required == std::set<std::string>{"X"});
  CHECK(c.optional.empty());
  CHECK(c.isolated == std::set<std::string>{"X"});
}

TEST_CASE("required chain stops at an optional edge") {
  const auto r = parse_products(
      "product p\ncomponent K\ncomponent L\ncomponent M\n"
      "edge K -> L {}\nedge L -> M {} optional\nstart K");
  REQUIRE(r.ok());
  const Classification c = classify_components(r.products[0]);
  // oracle: fixpoint over the required-edge subgraph
  CHECK(c.required == oracle_required_closure(r.products[0], {"K"}));
  CHECK(c.required == std::set<std::string>{"K", "L"});
  CHECK(c.optional == std::set<std::string>{"M"});
}

TEST_CASE("traversal follows required edges against their direction") {
  const auto r = parse_products(
      "product p\ncomponent A\ncomponent B\ncomponent C\n"
      "edge A -> B {}\nedge C -> B {}\nstart A");
  REQUIRE(r.ok());
  const Classification c = classify_components(r.products[0]);
  CHECK(c.required == std::set<std::string>{"A", "B", "C"});
}

TEST_CASE("find_isolated") {
  SUBCASE("fig2 has none") {
    const auto products = parse_fixture("fig2.plp");
    CHECK(find_isolated(products[0]).empty());
  }
  SUBCASE("connected pair has none") {
    const auto r = parse_products("product p\ncomponent X\ncomponent Y\nedge X -> Y {}\nstart X");
    CHECK(find_isolated(r.products[0]).empty());
  }
  SUBCASE("edge-free third component is isolated") {
    const auto r = parse_products(
        "product p\ncomponent X\ncomponent Y\ncomponent Z\nedge X -> Y {}\nstart X");
    CHECK(find_isolated(r.products[0]) == std::set<std::string>{"Z"});
  }
}

TEST_CASE("declared classification is returned as-is when no start set exists") {
  const auto r = parse_products(
      "product p\ncomponent X\ncomponent Y\ncomponent Z\n"
      "edge X -> Y {}\nclassify required X Y\nclassify optional Z");
  REQUIRE(r.ok());
  const Classification c = classify_components(r.products[0]);
  CHECK(c.required == std::set<std::string>{"X", "Y"});
  CHECK(c.optional == std::set<std::string>{"Z"});
}

TEST_CASE("declared required components seed the traversal") {
  const auto r = parse_products(
      "product p\ncomponent A\ncomponent B\ncomponent X\ncomponent Y\n"
      "edge A -> B {}\nedge X -> Y {}\nstart A\nclassify required X");
  REQUIRE(r.ok());
  const Classification c = classify_components(r.products[0]);
  // X is seeded by its declaration and drags Y in over the required edge
  CHECK(c.required == std::set<std::string>{"A", "B", "X", "Y"});
}

TEST_CASE("declared optional loses against required reachability") {
  const auto r = parse_products(
      "product p\ncomponent A\ncomponent B\nedge A -> B {}\nstart A\nclassify optional B");
  REQUIRE(r.ok());
  const Classification c = classify_components(r.products[0]);
  CHECK(c.required.count("B") == 1);
}

TEST_CASE("classification errors") {
  SUBCASE("no basis") {
    const auto r = parse_products("product p\ncomponent X\ncomponent Y\nclassify required X");
    REQUIRE(r.ok());
    CHECK_THROWS_AS(classify_components(r.products[0]), Error);
    try {
      classify_components(r.products[0]);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::no_classification_basis);
    }
  }
  SUBCASE("start override names an unknown component") {
    const auto r = parse_products("product p\ncomponent X\nstart X");
    REQUIRE(r.ok());
    try {
      classify_components(r.products[0], std::vector<std::string>{"nope"});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::start_not_found);
    }
  }
}

TEST_CASE("start override replaces the file's start set") {
  const auto products = parse_fixture("fig2.plp");
  const Classification c = classify_components(products[0], std::vector<std::string>{"P"});
  // from P only optional edges lead away, so P alone is required
  CHECK(c.required == std::set<std::string>{"P"});
}

TEST_CASE("random products match the fixpoint oracle and keep the partition invariants") {
  Rng rng(4242);
  for (int i = 0; i < 300; ++i) {
    const ProductGraph product = random_product(rng, "p", 12);
    const Classification c = classify_components(product);

    // partition
    std::set<std::string> all = c.required;
    all.insert(c.optional.begin(), c.optional.end());
    CHECK(all == product.component_names());
    for (const auto& name : c.required) CHECK(c.optional.count(name) == 0);

    // oracle equivalence over the effective start set
    std::set<std::string> seeds(product.start_set.begin(), product.start_set.end());
    for (const auto& [name, status] : product.declared_classification) {
      if (status == Optionality::Required) seeds.insert(name);
    }
    CHECK(c.required == oracle_required_closure(product, seeds));

    // isolated components are never required unless seeded
    for (const auto& name : c.isolated) {
      if (!seeds.count(name)) CHECK(c.optional.count(name) == 1);
    }
  }
}

TEST_CASE("enlarging the start set never shrinks the required set") {
  Rng rng(777);
  for (int i = 0; i < 100; ++i) {
    const ProductGraph product = random_product(rng, "p", 10);
    const Classification base = classify_components(product);

    ProductGraph larger = product;
    std::vector<std::string> names;
    for (const auto& component : product.components) names.push_back(component.name);
    larger.start_set.push_back(names[static_cast<std::size_t>(rng.range(0, static_cast<int>(names.size()) - 1))]);
    canonicalize(larger);

    const Classification grown = classify_components(larger);
    for (const auto& name : base.required) CHECK(grown.required.count(name) == 1);
  }
}

TEST_CASE("adding an optional edge never changes the required set") {
  Rng rng(555);
  for (int i = 0; i < 100; ++i) {
    const ProductGraph product = random_product(rng, "p", 10);
    if (product.components.size() < 2) continue;
    const Classification base = classify_components(product);

    ProductGraph extended = product;
    std::vector<std::string> names;
    for (const auto& component : product.components) names.push_back(component.name);
    DependencyEdge edge;
    edge.source = names[static_cast<std::size_t>(rng.range(0, static_cast<int>(names.size()) - 1))];
    edge.target = names[static_cast<std::size_t>(rng.range(0, static_cast<int>(names.size()) - 1))];
    if (edge.source == edge.target) continue;
    edge.signature = MessageSignature({{"probe", TypeTag::named("Probe")}});
    edge.optionality = Optionality::Optional;
    extended.edges.push_back(edge);
    canonicalize(extended);

    CHECK(classify_components(extended).required == base.required);
  }
}
