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

#include "plab/model.hpp"

using namespace plab;

TEST_CASE("type tags render and order") {
  CHECK(to_string(TypeTag::nat()) == "NAT");
  CHECK(to_string(TypeTag::integer()) == "INT");
  CHECK(to_string(TypeTag::real()) == "REAL");
  CHECK(to_string(TypeTag::named("Velocity")) == "Velocity");
  CHECK(TypeTag::nat() == TypeTag::nat());
  CHECK(TypeTag::named("A") != TypeTag::named("B"));
}

TEST_CASE("signatures normalize field order and reject duplicates") {
  const MessageSignature ab({{"b", TypeTag::real()}, {"a", TypeTag::nat()}});
  const MessageSignature ba({{"a", TypeTag::nat()}, {"b", TypeTag::real()}});
  CHECK(ab == ba);
  CHECK(to_string(ab) == "{a:NAT, b:REAL}");

  CHECK(to_string(MessageSignature{}) == "{}");
  CHECK(MessageSignature{}.empty());

  CHECK_THROWS_AS(MessageSignature({{"a", TypeTag::nat()}, {"a", TypeTag::real()}}), Error);
}

TEST_CASE("component and edge equality ignore provenance lines") {
  Component a{"X", {}, 3};
  Component b{"X", {}, 99};
  CHECK(a == b);

  DependencyEdge e1{"X", "Y", MessageSignature{}, Optionality::Required, 3};
  DependencyEdge e2{"X", "Y", MessageSignature{}, Optionality::Required, 7};
  CHECK(e1 == e2);
  DependencyEdge e3 = e2;
  e3.optionality = Optionality::Optional;
  CHECK(!(e1 == e3));
}

TEST_CASE("ratio equality is exact rational equality") {
  // unreduced forms compare equal exactly when cross products agree
  CHECK(Ratio::defined(2, 4) == Ratio::defined(1, 2));
  CHECK(Ratio::defined(2, 6) == Ratio::defined(1, 3));
  CHECK(Ratio::defined(0, 4) == Ratio::defined(0, 7));
  CHECK(Ratio::defined(1, 3) != Ratio::defined(1, 2));
  CHECK(Ratio::undefined() == Ratio::undefined());
  CHECK(Ratio::undefined() != Ratio::defined(0, 1));
  CHECK_THROWS_AS(Ratio::defined(1, 0), Error);
}

TEST_CASE("no two distinct reduced fractions compare equal") {
  for (std::uint64_t num_a = 0; num_a <= 8; ++num_a) {
    for (std::uint64_t den_a = 1; den_a <= 8; ++den_a) {
      for (std::uint64_t num_b = 0; num_b <= 8; ++num_b) {
        for (std::uint64_t den_b = 1; den_b <= 8; ++den_b) {
          const bool equal = Ratio::defined(num_a, den_a) == Ratio::defined(num_b, den_b);
          CHECK(equal == (num_a * den_b == num_b * den_a));
        }
      }
    }
  }
}

TEST_CASE("two-decimal rendering rounds half up") {
  CHECK(Ratio::defined(2, 7).decimal2() == "0.29");
  CHECK(Ratio::defined(4, 6).decimal2() == "0.67");
  CHECK(Ratio::defined(2, 9).decimal2() == "0.22");
  CHECK(Ratio::defined(2, 6).decimal2() == "0.33");
  CHECK(Ratio::defined(1, 2).decimal2() == "0.50");
  CHECK(Ratio::defined(3, 5).decimal2() == "0.60");
  CHECK(Ratio::defined(0, 4).decimal2() == "0.00");
  CHECK(Ratio::defined(2, 2).decimal2() == "1.00");
  CHECK(Ratio::defined(1, 200).decimal2() == "0.01");  // 0.005 rounds up
  CHECK(Ratio::undefined().decimal2() == "n/a");
}

TEST_CASE("ratio ordering") {
  CHECK(Ratio::less(Ratio::defined(1, 3), Ratio::defined(1, 2)));
  CHECK(!Ratio::less(Ratio::defined(2, 4), Ratio::defined(1, 2)));
  CHECK_THROWS_AS(Ratio::less(Ratio::undefined(), Ratio::defined(1, 2)), Error);
}
