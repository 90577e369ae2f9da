/*
   Copyright 2026 The splitcartan Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "splitcartan/factor.hpp"

using namespace splitcartan;

namespace {

IntPoly reassemble(const Factorization& f) {
  IntPoly prod = IntPoly::one();
  for (const auto& [g, m] : f.factors)
    for (int i = 0; i < m; ++i) prod = prod * g;
  // multiply by unit
  Rat u = f.unit;
  std::vector<Int> c;
  for (long i = 0; i <= prod.degree(); ++i) {
    Rat v = Rat(prod.coeff(i)) * u;
    REQUIRE(v.get_den() == 1);
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("factorization of simple polynomials") {
  SECTION("x^2 - 1") {
    auto f = factor_over_rationals(IntPoly({-1, 0, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == IntPoly({-1, 1}));
    CHECK(f.factors[1].first == IntPoly({1, 1}));
    CHECK(f.unit == 1);
  }
  SECTION("x^2 + 2 is irreducible") {
    auto f = factor_over_rationals(IntPoly({2, 0, 1}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == IntPoly({2, 0, 1}));
    CHECK(f.factors[0].second == 1);
  }
  SECTION("x^4 + 1 is irreducible despite splitting mod every prime") {
    auto f = factor_over_rationals(IntPoly({1, 0, 0, 0, 1}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first.degree() == 4);
  }
  SECTION("multiplicities (x-1)^2 (x+2)^3") {
    IntPoly a{-1, 1}, b{2, 1};
    auto f = factor_over_rationals(a * a * b * b * b);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::make_pair(a, 2));
    CHECK(f.factors[1] == std::make_pair(b, 3));
  }
  SECTION("content and sign go to the unit") {
    auto f = factor_over_rationals(IntPoly({6, 0, -6}));  // -6(x-1)(x+1)
    CHECK(f.unit == -6);
    CHECK(reassemble(f) == IntPoly({6, 0, -6}));
  }
  SECTION("zero polynomial rejected") {
    CHECK_THROWS_AS(factor_over_rationals(IntPoly()), std::invalid_argument);
  }
  SECTION("cyclotomic-style products") {
    // (x^2+x+1)(x^2-x+1)(x-2)
    IntPoly f = IntPoly({1, 1, 1}) * IntPoly({1, -1, 1}) * IntPoly({-2, 1});
    auto fac = factor_over_rationals(f);
    REQUIRE(fac.factors.size() == 3);
    CHECK(reassemble(fac) == f);
  }
}

TEST_CASE("random factor/refactor round trips") {
  std::mt19937_64 rng(424242);
  std::vector<IntPoly> pool = {
      IntPoly({-1, 1}), IntPoly({1, 1}),  IntPoly({2, 1}),    IntPoly({1, 0, 1}),
      IntPoly({2, 0, 1}), IntPoly({1, 1, 1}), IntPoly({-2, 0, 1}), IntPoly({1, -1, 0, 1}),
      IntPoly({3, 2, 1}), IntPoly({1, 0, 0, 1})};  // note x^3+1 = (x+1)(x^2-x+1)
  for (int trial = 0; trial < 20; ++trial) {
    IntPoly f = IntPoly::one();
    int parts = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < parts; ++i) f = f * pool[rng() % pool.size()];
    auto fac = factor_over_rationals(f);
    CHECK(reassemble(fac) == f);
    for (const auto& [g, m] : fac.factors) {
      (void)m;
      CHECK(irreducible_spot_check(g));
      CHECK(g.lc() > 0);
      CHECK(g.content() == 1);
    }
  }
}

TEST_CASE("irreducibility spot check") {
  CHECK(irreducible_spot_check(IntPoly({2, 0, 1})));
  CHECK(irreducible_spot_check(IntPoly({1, 0, 0, 0, 1})));
  CHECK(irreducible_spot_check(IntPoly({-2, 1})));
  CHECK(is_irreducible(IntPoly({7, -3, 0, 0, 1})));
  CHECK_FALSE(is_irreducible(IntPoly({-1, 0, 1})));
}

TEST_CASE("non-monic factorization via monicization") {
  // 4x^2 - 1 = (2x-1)(2x+1)
  auto f = factor_over_rationals(IntPoly({-1, 0, 4}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == IntPoly({-1, 2}));
  CHECK(f.factors[1].first == IntPoly({1, 2}));
  CHECK(reassemble(f) == IntPoly({-1, 0, 4}));
}
