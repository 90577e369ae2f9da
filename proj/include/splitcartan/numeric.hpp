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

#ifndef SPLITCARTAN_NUMERIC_HPP
#define SPLITCARTAN_NUMERIC_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace splitcartan {

// Exact integers and rationals. Nothing in this project ever rounds.
using Int = mpz_class;
using Rat = mpq_class;

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

inline Int int_from_long(long v) { return Int(static_cast<signed long>(v)); }

inline long xgcd_long(long a, long b, long& x, long& y) {
  // Returns g = gcd(a,b) and x, y with a*x + b*y = g.
  long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    long q = a / b;
    long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

inline long mod_long(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long invmod_long(long a, long m) {
  long x, y;
  long g = xgcd_long(mod_long(a, m), m, x, y);
  require(g == 1, "invmod_long: not invertible");
  return mod_long(x, m);
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  Int z = int_from_long(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

inline std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
  for (long i = 2; i <= bound; ++i) {
    if (!composite[static_cast<size_t>(i)]) {
      out.push_back(i);
      for (long j = i * i; j <= bound; j += i) composite[static_cast<size_t>(j)] = true;
    }
  }
  return out;
}

inline std::vector<std::pair<long, int>> factorize(long n) {
  require(n >= 1, "factorize: n must be positive");
  std::vector<std::pair<long, int>> fs;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fs.emplace_back(p, e);
    }
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

inline std::vector<long> divisors(long n) {
  auto fs = factorize(n);
  std::vector<long> ds{1};
  for (auto [p, e] : fs) {
    size_t sz = ds.size();
    long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline int moebius(long n) {
  if (n == 0) throw std::invalid_argument("moebius: n must be >= 1");
  require(n >= 1, "moebius: n must be >= 1");
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline long euler_phi(long n) {
  long phi = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    phi -= phi / p;
  }
  return phi;
}

inline int legendre(long a, long p) {
  Int za = int_from_long(a), zp = int_from_long(p);
  return mpz_legendre(za.get_mpz_t(), zp.get_mpz_t());
}

inline int kronecker(const Int& a, const Int& b) {
  return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

// Index of Gamma_0(N) in PSL_2(Z): N * prod_{p | N} (1 + 1/p).
inline long gamma0_index(long n) {
  require(n >= 1, "gamma0_index: N >= 1");
  long mu = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    mu += mu / p;
  }
  return mu;
}

inline long gamma0_nu2(long n) {
  if (n % 4 == 0) return 0;
  long nu = 1;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    if (p == 2) continue;
    nu *= 1 + legendre(-1, p);
  }
  return nu;
}

inline long gamma0_nu3(long n) {
  if (n % 9 == 0) return 0;
  long nu = 1;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    if (p == 3) continue;
    nu *= 1 + legendre(-3, p);
  }
  return nu;
}

inline long gamma0_ncusps(long n) {
  long c = 0;
  for (long d : divisors(n)) c += euler_phi(std::gcd(d, n / d));
  return c;
}

// Genus of X_0(N) by the standard index / elliptic point / cusp count formula.
inline long genus_x0(long n) {
  long twelve_g = 12 + gamma0_index(n) - 3 * gamma0_nu2(n) - 4 * gamma0_nu3(n) - 6 * gamma0_ncusps(n);
  require(twelve_g % 12 == 0, "genus_x0: formula must give an integer");
  return twelve_g / 12;
}

// Coefficient count certifying equality of weight-k forms on Gamma_0(N).
inline long sturm_bound(long level, long weight = 2) {
  long idx = gamma0_index(level);
  return (weight * idx + 11) / 12;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace splitcartan

#endif
