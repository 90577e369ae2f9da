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

#include "splitcartan/matrix.hpp"

using namespace splitcartan;

TEST_CASE("charpoly trivial cases") {
  SECTION("2x2 identity gives (x-1)^2") {
    RatPoly c = charpoly(QMatrix::identity(2));
    CHECK(c.coeffs() == std::vector<Rat>{Rat(1), Rat(-2), Rat(1)});
  }
  SECTION("zero 3x3 gives x^3") {
    RatPoly c = charpoly(QMatrix(3, 3));
    CHECK(c.coeffs() == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)});
  }
  SECTION("non-square rejected") {
    CHECK_THROWS_AS(charpoly(QMatrix(2, 3)), std::invalid_argument);
  }
}

TEST_CASE("charpoly known small matrix") {
  QMatrix m(2, 2);
  m.at(0, 0) = 0;
  m.at(0, 1) = -2;
  m.at(1, 0) = 1;
  m.at(1, 1) = -2;
  RatPoly c = charpoly(m);  // x^2 + 2x + 2
  CHECK(c.coeffs() == std::vector<Rat>{Rat(2), Rat(2), Rat(1)});
}

TEST_CASE("Cayley-Hamilton on random rational matrices") {
  std::mt19937_64 rng(987654);
  for (int trial = 0; trial < 25; ++trial) {
    long n = 1 + static_cast<long>(rng() % 6);
    QMatrix m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 4);
        m.at(i, j) = Rat(num, den);
      }
    RatPoly c = charpoly(m);
    CHECK(c.is_monic());
    CHECK(eval_at_matrix(c, m).is_zero());
  }
}

TEST_CASE("charpoly with large entries exercises several CRT primes") {
  // Diagonal matrix with huge entries: charpoly = prod (x - d_i).
  QMatrix m(3, 3);
  Int big1("123456789012345678901234567890");
  Int big2("-98765432109876543210987654321");
  Int big3("55555555555555555555555555555");
  m.at(0, 0) = Rat(big1);
  m.at(1, 1) = Rat(big2);
  m.at(2, 2) = Rat(big3);
  RatPoly c = charpoly(m);
  CHECK(c.eval(Rat(big1)) == 0);
  CHECK(c.eval(Rat(big2)) == 0);
  CHECK(c.eval(Rat(big3)) == 0);
  CHECK(c.coeff(2) == -(Rat(big1) + Rat(big2) + Rat(big3)));
}

TEST_CASE("rref, rank, kernels") {
  QMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(1, 2) = 6;
  CHECK(m.rank() == 1);
  QMatrix k = m.kernel();
  REQUIRE(k.rows() == 2);
  // Each kernel row x satisfies M x = 0.
  for (long r = 0; r < k.rows(); ++r) {
    for (long i = 0; i < m.rows(); ++i) {
      Rat acc(0);
      for (long j = 0; j < m.cols(); ++j) acc += m.at(i, j) * k.at(r, j);
      CHECK(acc == 0);
    }
  }
  QMatrix lk = m.left_kernel();
  REQUIRE(lk.rows() == 1);
  CHECK(lk.at(0, 0) * m.at(0, 2) + lk.at(0, 1) * m.at(1, 2) == 0);
}

TEST_CASE("apply_left matches matrix multiplication") {
  QMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 1) = 4;
  QVec v{Rat(5), Rat(7)};
  QVec out = m.apply_left(v);
  CHECK(out[0] == 26);
  CHECK(out[1] == 38);
}
