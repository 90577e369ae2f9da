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

// Test-only oracles, independent of the library's computation paths.

#ifndef SPLITCARTAN_TESTS_ORACLES_HPP
#define SPLITCARTAN_TESTS_ORACLES_HPP

#include <vector>

#include "splitcartan/numeric.hpp"

namespace splitcartan::oracles {

// q * prod_{k>=1} (1-q^k)^2 (1-q^(11k))^2, expanded by brute force.
// Coefficient of q^n is the Hecke eigenvalue a_n of the level-11 newform.
inline std::vector<Int> eta_product_level11(long n_terms) {
  std::vector<Int> f(static_cast<size_t>(n_terms), Int(0));
  if (n_terms > 1) f[1] = 1;  // start from q
  auto mul_cyclotomic = [&](long k) {
    // multiply by (1 - q^k)
    for (long n = n_terms - 1; n >= k; --n) f[static_cast<size_t>(n)] -= f[static_cast<size_t>(n - k)];
  };
  for (long k = 1; k < n_terms; ++k) {
    mul_cyclotomic(k);
    mul_cyclotomic(k);
    if (11 * k < n_terms) {
      mul_cyclotomic(11 * k);
      mul_cyclotomic(11 * k);
    }
  }
  return f;
}

// Class number of the imaginary quadratic order of discriminant D < 0,
// by enumerating reduced primitive binary quadratic forms (a, b, c).
inline long class_number_forms(long D) {
  require(D < 0 && (D % 4 == 0 || ((D % 4) + 4) % 4 == 1), "class_number_forms: bad discriminant");
  long count = 0;
  for (long a = 1; a * a * 3 <= -D; ++a) {
    for (long b = -a; b <= a; ++b) {
      long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if ((b < 0) && (a == c || a == b || a == -b)) continue;  // reduced form tie rules
      if (std::gcd(std::gcd(a, b), c) != 1) continue;          // primitive only
      ++count;
    }
  }
  return count;
}

// Number of elements of exact degree d over F_2 inside F_bar, found by
// enumerating monic irreducible polynomials of degree d over F_2.
inline long exact_degree_count_f2(long d) {
  // count irreducible monic degree-d polynomials by brute force trial division
  long total = 0;
  long n_polys = 1L << d;
  auto poly_mod = [&](unsigned long a, unsigned long m) {
    // degree of a
    auto degree = [](unsigned long x) {
      int deg = -1;
      while (x) {
        ++deg;
        x >>= 1;
      }
      return deg;
    };
    int dm = degree(m);
    while (degree(a) >= dm && a) a ^= m << (degree(a) - dm);
    return a;
  };
  for (long bits = 0; bits < n_polys; ++bits) {
    unsigned long f = (1UL << d) | static_cast<unsigned long>(bits);
    bool irred = true;
    for (long e = 1; 2 * e <= d && irred; ++e) {
      long sub = 1L << e;
      for (long gb = 0; gb < sub; ++gb) {
        unsigned long g = (1UL << e) | static_cast<unsigned long>(gb);
        if (poly_mod(f, g) == 0) {
          irred = false;
          break;
        }
      }
    }
    if (irred) ++total;
  }
  return total * d;
}

}  // namespace splitcartan::oracles

#endif
