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

#ifndef SPLITCARTAN_GENUS_HPP
#define SPLITCARTAN_GENUS_HPP

#include "splitcartan/numeric.hpp"

namespace splitcartan {

struct GenusData {
  long p;
  long g_plus;  // genus of X_0^+(p^2)
  long g_zero;  // genus of X_0(p)
};

// Closed-form genus values by residue class of p mod 12.
inline GenusData genus_table(long p) {
  if (p < 11 || !is_prime(p))
    throw std::invalid_argument("genus_table: p must be a prime >= 11");
  GenusData g{p, 0, 0};
  switch (p % 12) {
    case 1:
      g.g_plus = (p - 1) * (p - 7) / 24;
      g.g_zero = (p - 13) / 12;
      break;
    case 5:
      g.g_plus = (p - 3) * (p - 5) / 24;
      g.g_zero = (p - 5) / 12;
      break;
    case 7:
      g.g_plus = (p - 1) * (p - 7) / 24;
      g.g_zero = (p - 7) / 12;
      break;
    case 11:
      g.g_plus = (p - 3) * (p - 5) / 24;
      g.g_zero = (p + 1) / 12;
      break;
    default:
      throw std::invalid_argument("genus_table: impossible residue");
  }
  return g;
}

// Residue degree s of the prime 2 in K = Q(sqrt(p*)), p* = (-1)^((p-1)/2) p.
// s = 1 iff p* = 1 (mod 8) (2 splits); otherwise 2 is inert and s = 2.
inline long residue_degree(long p) {
  if (p == 2) throw std::invalid_argument("residue_degree: p must be odd");
  require(is_prime(p) && p > 2, "residue_degree: odd prime expected");
  long p_star = (p % 4 == 1) ? p : -p;
  return (mod_long(p_star, 8) == 1) ? 1 : 2;
}

// Largest admissible fixed point count 2r of an involution:
// Riemann-Hurwitz forces r = g+ + 1 (mod 2), the global cap is 12.
inline long max_fixed_points(long g_plus) {
  require(g_plus >= 2, "max_fixed_points: g+ >= 2");
  return (g_plus % 2 == 0) ? 10 : 12;
}

struct OddOrderExclusion {
  bool excluded;
  Rat bound;  // (g+ - 1) / (t - 1), compared exactly against 3
};

// Riemann-Hurwitz order bound: an automorphism of odd order m satisfies
// m <= (g+ - 1)/(t - 1); orders > 1 are excluded when that bound is < 3.
inline OddOrderExclusion exclude_odd_order(long p, long t, long g_plus) {
  (void)p;
  if (t <= 1) throw std::invalid_argument("exclude_odd_order: bound undefined for t <= 1");
  Rat bound(g_plus - 1, t - 1);
  bound.canonicalize();
  return {bound < 3, bound};
}

// For p > 31 the genus alone exceeds the point-count cap 30 coming from
// gonality <= 6 over F_4, so no nontrivial automorphism can exist.
inline bool genus_bound_excludes(long p) {
  require(p > 31, "genus_bound_excludes: intended for p > 31");
  return genus_table(p).g_plus > 30;
}

}  // namespace splitcartan

#endif
