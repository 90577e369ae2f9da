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

#include "oracles.hpp"
#include "splitcartan/weil.hpp"

using namespace splitcartan;

TEST_CASE("genus table for the seven primes") {
  struct Row { long p, gp, g0; };
  for (auto [p, gp, g0] : {Row{11, 2, 1}, Row{13, 3, 0}, Row{17, 7, 1}, Row{19, 9, 1},
                           Row{23, 15, 2}, Row{29, 26, 2}, Row{31, 30, 2}}) {
    GenusData g = genus_table(p);
    CHECK(g.g_plus == gp);
    CHECK(g.g_zero == g0);
  }
  CHECK(genus_table(37).g_plus == 45);
  CHECK(genus_table(41).g_plus == 57);
  CHECK(genus_table(43).g_plus == 63);
  CHECK_THROWS_AS(genus_table(4), std::invalid_argument);
  CHECK_THROWS_AS(genus_table(7), std::invalid_argument);
}

TEST_CASE("genus table row g0 equals the standard genus formula") {
  for (long p : primes_up_to(200)) {
    if (p < 11) continue;
    CHECK(genus_table(p).g_zero == genus_x0(p));
  }
}

TEST_CASE("residue degree of 2 in K") {
  CHECK(residue_degree(31) == 1);  // 2 splits in Q(sqrt(-31))
  CHECK(residue_degree(29) == 2);  // inert in Q(sqrt(29))
  CHECK(residue_degree(23) == 1);
  CHECK(residue_degree(19) == 2);
  CHECK(residue_degree(17) == 1);
  CHECK_THROWS_AS(residue_degree(2), std::invalid_argument);
}

TEST_CASE("maximal fixed point count by genus parity") {
  CHECK(max_fixed_points(30) == 10);
  CHECK(max_fixed_points(26) == 10);
  CHECK(max_fixed_points(15) == 12);
  CHECK(max_fixed_points(9) == 12);
  CHECK(max_fixed_points(7) == 12);
}

TEST_CASE("odd order exclusion bound") {
  auto e17 = exclude_odd_order(17, 5, 7);
  CHECK(e17.excluded);
  CHECK(e17.bound == Rat(3, 2));
  auto e29 = exclude_odd_order(29, 15, 26);
  CHECK(e29.excluded);
  CHECK(e29.bound == Rat(25, 14));
  auto e31 = exclude_odd_order(31, 12, 30);
  CHECK(e31.excluded);
  CHECK(e31.bound == Rat(29, 11));
  CHECK_THROWS_AS(exclude_odd_order(17, 1, 7), std::invalid_argument);
  // not excluded when the bound reaches 3
  CHECK_FALSE(exclude_odd_order(17, 2, 7).excluded);
}

TEST_CASE("genus bound excludes p > 31") {
  CHECK(genus_bound_excludes(37));
  CHECK(genus_bound_excludes(41));
  CHECK(genus_bound_excludes(43));
  CHECK(genus_bound_excludes(101));
  CHECK_THROWS(genus_bound_excludes(31));
}

namespace {

const Catalog& cat11() {
  static const Catalog cat = [] {
    auto sp = std::make_shared<const ModularSymbolSpace>(11);
    auto sp2 = std::make_shared<const ModularSymbolSpace>(121);
    return build_catalog(11, 30, sp, sp2, 2).meta;
  }();
  return cat;
}

}  // namespace

TEST_CASE("Weil polynomial for p = 11 at ell = 2") {
  WeilData w = weil_polynomial(cat11(), 2, 16);
  // (x^2 + 2)(x^2 + 2x + 2)
  IntPoly expect = IntPoly({2, 0, 1}) * IntPoly({2, 2, 1});
  CHECK(w.weil_poly == expect);
  CHECK(w.point_count(1) == 5);  // N_2(1) = 3 - (0 + (-2))
  CHECK(w.g_plus == 2);
  CHECK(weil_functional_equation_holds(w.weil_poly, 2, 2));
}

TEST_CASE("Weil polynomials at several ell satisfy the functional equation") {
  for (long ell : {2L, 3L, 5L, 7L, 13L}) {
    WeilData w = weil_polynomial(cat11(), ell, 6);
    CHECK(weil_functional_equation_holds(w.weil_poly, ell, w.g_plus));
    Int ct(1);
    for (long i = 0; i < w.g_plus; ++i) ct *= Int(ell);
    CHECK(w.weil_poly.coeff(0) == ct);
  }
  CHECK_THROWS(weil_polynomial(cat11(), 11, 4));
}

TEST_CASE("genus zero oracle: R sequence matches direct enumeration over P^1") {
  // g+ = 0: the Weil polynomial is 1 and N(n) = 2^n + 1.
  WeilData w;
  w.p = 0;
  w.ell = 2;
  w.s = 1;
  w.g_plus = 0;
  w.weil_poly = IntPoly::one();
  long bound = 8;
  Int pw(1);
  for (long k = 1; k <= bound; ++k) {
    pw *= 2;
    w.n.push_back(pw + 1);
  }
  ParityCertificate cert = parity_sequence(w, 6, 12);
  for (long n = 1; n <= 7; ++n) {
    Int direct(1);  // the point at infinity
    for (long d = 1; d <= n; ++d) direct += Int(oracles::exact_degree_count_f2(d));
    CHECK(cert.r[static_cast<size_t>(n - 1)] == direct);
  }
  CHECK(cert.moebius_gcd_agree);
}

TEST_CASE("parity certificate for p = 11 cross-checks pass") {
  long s = residue_degree(11);  // -11 = 5 mod 8: inert, s = 2
  CHECK(s == 2);
  WeilData w = weil_polynomial(cat11(), 2, s * 13);
  ParityCertificate cert = parity_sequence(w, 12, 12);
  CHECK(cert.moebius_gcd_agree);
  CHECK_FALSE(cert.verbatim_recursion_note.empty());
  // R is nondecreasing and P bits are 0/1.
  for (size_t i = 1; i < cert.r.size(); ++i) CHECK(cert.r[i] >= cert.r[i - 1]);
  for (int b : cert.p_bits) CHECK((b == 0 || b == 1));
}

TEST_CASE("parity n ranges are pinned") {
  CHECK(parity_n_max(31) == 36);
  CHECK(parity_n_max(29) == 42);
  CHECK(parity_n_max(23) == 38);
  CHECK(parity_n_max(19) == 46);
  CHECK(parity_n_max(17) == 46);
  CHECK_THROWS_AS(parity_n_max(11), std::invalid_argument);
}
