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

#include "splitcartan/numeric.hpp"

using namespace splitcartan;

TEST_CASE("moebius values and inversion identity") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK_THROWS_AS(moebius(0), std::invalid_argument);

  for (long n = 1; n <= 10000; ++n) {
    long s = 0;
    for (long d : divisors(n)) s += moebius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("basic number theory helpers") {
  CHECK(is_prime(11));
  CHECK(is_prime(961) == false);
  CHECK(primes_up_to(20) == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(euler_phi(121) == 110);
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK(legendre(7, 7) == 0);
  long x, y;
  CHECK(xgcd_long(240, 46, x, y) == 2);
  CHECK(240 * x + 46 * y == 2);
  CHECK(invmod_long(3, 11) == 4);
}

TEST_CASE("Gamma_0 index, cusp and genus formulas") {
  CHECK(gamma0_index(11) == 12);
  CHECK(gamma0_index(121) == 132);
  CHECK(gamma0_index(961) == 992);
  CHECK(gamma0_ncusps(11) == 2);
  CHECK(gamma0_ncusps(121) == 12);
  CHECK(gamma0_ncusps(961) == 32);
  CHECK(genus_x0(1) == 0);
  CHECK(genus_x0(11) == 1);
  CHECK(genus_x0(17) == 1);
  CHECK(genus_x0(121) == 6);
  CHECK(genus_x0(169) == 8);
  CHECK(genus_x0(289) == 17);
  CHECK(genus_x0(361) == 22);
  CHECK(genus_x0(529) == 35);
  CHECK(genus_x0(841) == 58);
  CHECK(genus_x0(961) == 67);
}

TEST_CASE("Sturm bound") {
  CHECK(sturm_bound(121) == 22);
  CHECK(sturm_bound(169) == 31);
  CHECK(sturm_bound(289) == 51);
  CHECK(sturm_bound(361) == 64);
  CHECK(sturm_bound(529) == 92);
  CHECK(sturm_bound(841) == 145);
  CHECK(sturm_bound(961) == 166);
  CHECK(sturm_bound(121, 12) == 132);
}
