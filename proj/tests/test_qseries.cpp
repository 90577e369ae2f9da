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

#include "splitcartan/qseries.hpp"

using namespace splitcartan;

namespace {

QSeries random_series(std::mt19937_64& rng, long val, long prec) {
  std::vector<Rat> c;
  for (long n = val; n < prec; ++n) c.emplace_back(static_cast<long>(rng() % 9) - 4);
  return QSeries(val, prec, std::move(c));
}

}  // namespace

TEST_CASE("series multiplication example") {
  QSeries a(0, 5, {Rat(1), Rat(1)});   // 1 + q
  QSeries b(0, 5, {Rat(1), Rat(-1)});  // 1 - q
  QSeries p = a * b;
  CHECK(p.precision() == 5);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -1);
  CHECK(p.coeff(3) == 0);
  CHECK(p.coeff(4) == 0);
}

TEST_CASE("derive is q d/dq") {
  QSeries q3 = QSeries::monomial(3, 10);
  QSeries d = q3.derive();
  CHECK(d.coeff(3) == 3);
  CHECK(d.valuation() == 3);
  QSeries c = QSeries::one(10);
  CHECK(c.derive().is_zero_to_precision());
}

TEST_CASE("inverse and division semantics") {
  // f = q(1 + q): 1/f = q^{-1}(1 - q + q^2 - ...)
  QSeries f(1, 6, {Rat(1), Rat(1)});
  QSeries inv = f.inverse();
  CHECK(inv.valuation() == -1);
  CHECK(inv.precision() == 4);
  CHECK(inv.coeff(-1) == 1);
  CHECK(inv.coeff(0) == -1);
  CHECK(inv.coeff(1) == 1);
  QSeries prod = f * inv;
  CHECK(prod.coeff(0) == 1);
  for (long n = 1; n < prod.precision(); ++n) CHECK(prod.coeff(n) == 0);

  CHECK_THROWS_AS(QSeries::zero(5).inverse(), std::invalid_argument);
}

TEST_CASE("division round trip property") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    QSeries a = random_series(rng, 0, 12);
    QSeries b = random_series(rng, 0, 12);
    // ensure b invertible
    if (b.coeff(0) == 0) b = b + QSeries::one(12);
    QSeries q = (a * b) / b;
    CHECK(q.agrees_with(a));
  }
}

TEST_CASE("stretch substitutes q -> q^k") {
  QSeries f(1, 4, {Rat(1), Rat(-2), Rat(5)});  // q - 2q^2 + 5q^3
  QSeries g = f.stretch(11);
  CHECK(g.coeff(11) == 1);
  CHECK(g.coeff(22) == -2);
  CHECK(g.coeff(33) == 5);
  CHECK(g.precision() == 44);
}

TEST_CASE("precision bookkeeping through multiplication") {
  QSeries a(2, 7, {Rat(1)});            // q^2 known below q^7
  QSeries b(3, 11, {Rat(1), Rat(4)});   // q^3 + 4 q^4 known below q^11
  QSeries p = a * b;
  // min(7 + 3, 11 + 2) = 10
  CHECK(p.precision() == 10);
  CHECK(p.valuation() == 5);
  CHECK(p.coeff(6) == 4);
}

TEST_CASE("coefficient access beyond precision throws") {
  QSeries a(0, 3, {Rat(1)});
  CHECK_THROWS(a.coeff(3));
}
