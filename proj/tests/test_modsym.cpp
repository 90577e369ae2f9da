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
#include "splitcartan/factor.hpp"
#include "splitcartan/modsym.hpp"

using namespace splitcartan;

TEST_CASE("P1 sizes and normalization") {
  CHECK(P1(11).size() == 12);
  CHECK(P1(121).size() == 132);
  CHECK(P1(1).size() == 1);
  P1 p(121);
  for (long i = 0; i < p.size(); ++i) {
    auto [c, d] = p.rep(i);
    CHECK(p.index_of(c, d) == i);
    // Multiplying by a unit does not change the class.
    CHECK(p.index_of(3 * c, 3 * d) == i);
    auto g = p.lift_to_sl2(i);
    CHECK(g[0] * g[3] - g[1] * g[2] == 1);
    CHECK(p.index_of(g[2], g[3]) == i);
  }
  CHECK(p.index_of(11, 22) == -1);  // gcd(11,22,121) = 11
}

TEST_CASE("space dimensions match 2g + cusps - 1") {
  for (long n : {2L, 11L, 14L, 15L, 17L, 121L, 169L}) {
    ModularSymbolSpace s(n);
    long expected = 2 * genus_x0(n) + gamma0_ncusps(n) - 1;
    CHECK(s.dim() == expected);
    CHECK(s.n_cusps() == gamma0_ncusps(n));
    CHECK(s.cuspidal().dim() == 2 * genus_x0(n));
    CHECK(s.cuspidal_plus().dim() == genus_x0(n));
  }
}

TEST_CASE("level 1 has trivial cuspidal space") {
  ModularSymbolSpace s(1);
  CHECK(s.cuspidal().dim() == 0);
}

TEST_CASE("level cap is enforced") {
  CHECK_THROWS_AS(ModularSymbolSpace(3000), std::invalid_argument);
}

TEST_CASE("star is an involution commuting with Hecke") {
  ModularSymbolSpace s(33);
  QMatrix star = s.star_matrix();
  CHECK(star * star == QMatrix::identity(s.dim()));
  QMatrix t2 = s.hecke_matrix(2);
  CHECK(star * t2 == t2 * star);
}

TEST_CASE("level 11: T_2 on cuspidal symbols") {
  ModularSymbolSpace s(11);
  const Subspace& cusp = s.cuspidal();
  REQUIRE(cusp.dim() == 2);
  QMatrix t2 = cusp.restrict_operator(s.hecke_matrix(2));
  RatPoly c = charpoly(t2);
  // (x+2)^2: the eta-product oracle gives a_2 = -2.
  auto eta = oracles::eta_product_level11(8);
  REQUIRE(eta[2] == -2);
  CHECK(c.coeffs() == std::vector<Rat>{Rat(4), Rat(4), Rat(1)});

  const Subspace& plus = s.cuspidal_plus();
  REQUIRE(plus.dim() == 1);
  QMatrix t2p = plus.restrict_operator(s.hecke_matrix(2));
  CHECK(t2p.at(0, 0) == -2);
}

TEST_CASE("level 11: Hecke eigenvalues match the eta product") {
  ModularSymbolSpace s(11);
  const Subspace& plus = s.cuspidal_plus();
  auto eta = oracles::eta_product_level11(32);
  for (long ell : {2L, 3L, 5L, 7L, 13L, 17L, 19L, 23L, 29L, 31L}) {
    QMatrix t = plus.restrict_operator(s.hecke_matrix(ell));
    CHECK(t.at(0, 0) == Rat(eta[static_cast<size_t>(ell)]));
  }
  // U_11 at the prime dividing the level: a_11 = 1.
  QMatrix u11 = plus.restrict_operator(s.hecke_matrix(11));
  CHECK(u11.at(0, 0) == Rat(eta[11]));
  CHECK(eta[11] == 1);
}

TEST_CASE("Hecke operators commute") {
  ModularSymbolSpace s(121);
  QMatrix t2 = s.hecke_matrix(2);
  QMatrix t3 = s.hecke_matrix(3);
  CHECK(t2 * t3 == t3 * t2);
}

TEST_CASE("Fricke involution") {
  SECTION("level 11: w acts as -1 on the cuspidal space") {
    ModularSymbolSpace s(11);
    QMatrix w = s.cuspidal().restrict_operator(s.fricke_matrix());
    QMatrix minus = QMatrix::identity(2) * Rat(-1);
    CHECK(w == minus);
  }
  SECTION("level 121: w^2 = identity and commutes with T_2") {
    ModularSymbolSpace s(121);
    QMatrix w = s.fricke_matrix();
    const Subspace& cusp = s.cuspidal();
    QMatrix wc = cusp.restrict_operator(w);
    CHECK(wc * wc == QMatrix::identity(cusp.dim()));
    QMatrix t2 = cusp.restrict_operator(s.hecke_matrix(2));
    CHECK(wc * t2 == t2 * wc);
  }
}

TEST_CASE("path conversion consistency") {
  ModularSymbolSpace s(121);
  // {oo -> 0} + {0 -> oo} = 0
  QVec a = s.path_vector(Int(1), Int(0), Int(0), Int(1));
  QVec b = s.path_vector(Int(0), Int(1), Int(1), Int(0));
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] + b[i] == 0);
  // Degenerate path is zero.
  QVec c = s.path_vector(Int(3), Int(7), Int(3), Int(7));
  for (const auto& v : c) CHECK(v == 0);
}

TEST_CASE("degeneracy maps and the new subspace at level 121") {
  ModularSymbolSpace big(121);
  ModularSymbolSpace small(11);
  QMatrix d1 = big.degeneracy_matrix(small, 1);
  QMatrix dp = big.degeneracy_matrix(small, 11);

  // Stack both maps and intersect kernels inside the cuspidal subspace.
  const Subspace& cusp = big.cuspidal();
  QMatrix stacked(big.dim(), 2 * small.dim());
  for (long i = 0; i < big.dim(); ++i) {
    for (long j = 0; j < small.dim(); ++j) {
      stacked.at(i, j) = d1.at(i, j);
      stacked.at(i, small.dim() + j) = dp.at(i, j);
    }
  }
  QMatrix on_cusp = cusp.rows * stacked;
  Subspace new_cusp = cusp.compose(on_cusp.left_kernel());
  // dim(new cuspidal) = 2 g(121) - 2*2*g(11) = 12 - 4 = 8.
  CHECK(new_cusp.dim() == 8);

  // Old + new dimensions add up.
  CHECK(big.cuspidal().dim() - new_cusp.dim() == 2 * 2 * genus_x0(11));
}

TEST_CASE("charpoly of T_2 factors on new cuspidal symbols (level 121)") {
  ModularSymbolSpace big(121);
  ModularSymbolSpace small(11);
  QMatrix d1 = big.degeneracy_matrix(small, 1);
  QMatrix dp = big.degeneracy_matrix(small, 11);
  const Subspace& cusp = big.cuspidal();
  QMatrix stacked(big.dim(), 2 * small.dim());
  for (long i = 0; i < big.dim(); ++i)
    for (long j = 0; j < small.dim(); ++j) {
      stacked.at(i, j) = d1.at(i, j);
      stacked.at(i, small.dim() + j) = dp.at(i, j);
    }
  Subspace new_cusp = cusp.compose((cusp.rows * stacked).left_kernel());
  QMatrix t2 = new_cusp.restrict_operator(big.hecke_matrix(2));
  RatPoly cp = charpoly(t2);
  CHECK(cp.degree() == 8);
  auto fac = factor_over_rationals(cp.primitive_int());
  long degree_sum = 0;
  for (const auto& [g, m] : fac.factors) degree_sum += g.degree() * m;
  CHECK(degree_sum == 8);
  // The CM form has a_2 = 0: x^2 (doubled eigenvalue on +/- parts) divides.
  bool has_x = false;
  for (const auto& [g, m] : fac.factors)
    if (g == IntPoly({0, 1})) {
      has_x = true;
      CHECK(m == 2);
    }
  CHECK(has_x);
}

TEST_CASE("Merel matrix family") {
  auto m2 = ModularSymbolSpace::merel_matrices(2);
  CHECK(m2.size() == 4);
  for (const auto& h : ModularSymbolSpace::merel_matrices(7)) {
    CHECK(h[0] * h[3] - h[1] * h[2] == 7);
    CHECK(h[0] > h[1]);
    CHECK(h[1] >= 0);
    CHECK(h[3] > h[2]);
    CHECK(h[2] >= 0);
  }
}
