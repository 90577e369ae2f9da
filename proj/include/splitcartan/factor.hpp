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

#ifndef SPLITCARTAN_FACTOR_HPP
#define SPLITCARTAN_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "splitcartan/matrix.hpp"
#include "splitcartan/numeric.hpp"
#include "splitcartan/polynomial.hpp"

namespace splitcartan {
namespace modp {

// Polynomials over F_p for word-size p, ascending coefficients, normalized.
using Poly = std::vector<uint64_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long deg(const Poly& f) { return static_cast<long>(f.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
  }
  trim(c);
  return c;
}

inline Poly sub(Poly a, const Poly& b, uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly monic(Poly f, uint64_t p) {
  trim(f);
  if (f.empty()) return f;
  uint64_t inv = detail::invmod_u64(f.back(), p);
  for (auto& v : f) v = detail::mulmod_u64(v, inv, p);
  return f;
}

inline Poly rem(Poly a, const Poly& b, uint64_t p) {
  trim(a);
  long db = deg(b);
  require(db >= 0, "modp::rem by zero");
  uint64_t binv = detail::invmod_u64(b.back(), p);
  while (deg(a) >= db) {
    uint64_t q = detail::mulmod_u64(a.back(), binv, p);
    long shift = deg(a) - db;
    if (q != 0)
      for (long j = 0; j <= db; ++j) {
        uint64_t s = detail::mulmod_u64(q, b[static_cast<size_t>(j)], p);
        auto& t = a[static_cast<size_t>(shift + j)];
        t = (t + p - s) % p;
      }
    a.pop_back();
    trim(a);
  }
  return a;
}

inline Poly divexact(const Poly& a0, const Poly& b, uint64_t p) {
  Poly a = a0;
  trim(a);
  long db = deg(b);
  require(db >= 0, "modp::divexact by zero");
  if (deg(a) < db) {
    require(a.empty(), "modp::divexact: not divisible");
    return {};
  }
  uint64_t binv = detail::invmod_u64(b.back(), p);
  Poly q(static_cast<size_t>(deg(a) - db) + 1, 0);
  while (deg(a) >= db) {
    uint64_t qc = detail::mulmod_u64(a.back(), binv, p);
    long shift = deg(a) - db;
    q[static_cast<size_t>(shift)] = qc;
    for (long j = 0; j <= db; ++j) {
      uint64_t s = detail::mulmod_u64(qc, b[static_cast<size_t>(j)], p);
      auto& t = a[static_cast<size_t>(shift + j)];
      t = (t + p - s) % p;
    }
    trim(a);
  }
  require(a.empty(), "modp::divexact: nonzero remainder");
  return q;
}

inline Poly gcd(Poly a, Poly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

inline Poly deriv(const Poly& f, uint64_t p) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i)
    d[i - 1] = detail::mulmod_u64(f[i], static_cast<uint64_t>(i % p), p);
  trim(d);
  return d;
}

inline Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
  return rem(mul(a, b, p), f, p);
}

// Quotient of Euclidean division.
inline Poly quo(Poly a, const Poly& b, uint64_t p) {
  trim(a);
  long db = deg(b);
  require(db >= 0, "modp::quo by zero");
  if (deg(a) < db) return {};
  uint64_t binv = detail::invmod_u64(b.back(), p);
  Poly q(static_cast<size_t>(deg(a) - db) + 1, 0);
  while (deg(a) >= db) {
    uint64_t qc = detail::mulmod_u64(a.back(), binv, p);
    long shift = deg(a) - db;
    q[static_cast<size_t>(shift)] = qc;
    for (long j = 0; j <= db; ++j) {
      uint64_t s = detail::mulmod_u64(qc, b[static_cast<size_t>(j)], p);
      auto& t = a[static_cast<size_t>(shift + j)];
      t = (t + p - s) % p;
    }
    trim(a);
  }
  return q;
}

// Inverse of a modulo m over F_p[x]; requires gcd(a, m) = 1.
inline Poly invmod_poly(const Poly& a0, const Poly& m, uint64_t p) {
  Poly r0 = m, r1 = rem(a0, m, p);
  Poly t0{}, t1{1};
  while (deg(r1) >= 0) {
    Poly qq = quo(r0, r1, p);
    Poly r2 = sub(r0, mul(qq, r1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    Poly t2 = sub(t0, mul(qq, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  require(deg(r0) == 0, "invmod_poly: not coprime");
  uint64_t inv = detail::invmod_u64(r0[0], p);
  for (auto& v : t0) v = detail::mulmod_u64(v, inv, p);
  return rem(std::move(t0), m, p);
}

inline Poly powmod_poly(Poly base, Int e, const Poly& f, uint64_t p) {
  Poly r{1};
  base = rem(std::move(base), f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mulmod_poly(r, base, f, p);
    base = mulmod_poly(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline IntPoly to_int_poly(const Poly& f, uint64_t p) {
  std::vector<Int> c(f.size());
  uint64_t half = p / 2;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] > half)
      c[i] = -Int(static_cast<unsigned long>(p - f[i]));
    else
      c[i] = Int(static_cast<unsigned long>(f[i]));
  }
  return IntPoly(std::move(c));
}

inline Poly from_int_poly(const IntPoly& f, uint64_t p) {
  Poly c(static_cast<size_t>(f.degree()) + 1);
  for (long i = 0; i <= f.degree(); ++i) {
    Int r = f.coeff(i) % Int(static_cast<unsigned long>(p));
    if (r < 0) r += Int(static_cast<unsigned long>(p));
    c[static_cast<size_t>(i)] = mpz_get_ui(r.get_mpz_t());
  }
  trim(c);
  return c;
}

// Distinct-degree decomposition of a squarefree monic polynomial.
// Returns (product of degree-d irreducibles, d).
inline std::vector<std::pair<Poly, long>> distinct_degree(const Poly& f0, uint64_t p) {
  std::vector<std::pair<Poly, long>> out;
  Poly f = f0;
  Poly xq{0, 1};
  long d = 0;
  while (deg(f) >= 1) {
    ++d;
    if (2 * d > deg(f)) {
      out.emplace_back(f, deg(f));
      break;
    }
    xq = powmod_poly(std::move(xq), Int(static_cast<unsigned long>(p)), f, p);
    Poly diff = xq;
    // x^(p^d) - x
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Poly g = gcd(f, diff, p);
    if (deg(g) >= 1) {
      out.emplace_back(g, d);
      f = divexact(f, g, p);
      xq = rem(std::move(xq), f, p);
    }
  }
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (odd p), deterministic seeding.
inline void equal_degree_split(const Poly& f, long d, uint64_t p, std::mt19937_64& rng,
                               std::vector<Poly>& out) {
  if (deg(f) == d) {
    out.push_back(monic(f, p));
    return;
  }
  Int pd(1);
  for (long i = 0; i < d; ++i) pd *= Int(static_cast<unsigned long>(p));
  Int exponent = (pd - 1) / 2;
  while (true) {
    Poly a(static_cast<size_t>(deg(f)), 0);
    for (auto& v : a) v = rng() % p;
    trim(a);
    if (deg(a) < 1) continue;
    Poly g = gcd(f, a, p);
    if (deg(g) >= 1 && deg(g) < deg(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divexact(f, g, p), d, p, rng, out);
      return;
    }
    Poly b = powmod_poly(a, exponent, f, p);
    if (b.empty()) continue;
    b[0] = (b[0] + p - 1) % p;
    trim(b);
    g = gcd(f, b, p);
    if (deg(g) >= 1 && deg(g) < deg(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divexact(f, g, p), d, p, rng, out);
      return;
    }
  }
}

// Full factorization of a squarefree monic polynomial over F_p (p odd).
inline std::vector<Poly> factor_squarefree(const Poly& f, uint64_t p, uint64_t seed) {
  std::vector<Poly> out;
  std::mt19937_64 rng(seed);
  for (auto& [g, d] : distinct_degree(f, p)) {
    if (deg(g) == d) {
      out.push_back(monic(g, p));
    } else {
      equal_degree_split(g, d, p, rng, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace modp

namespace detail_factor {

// Linear multifactor Hensel lifting for a monic squarefree f with
// f = prod h_i (mod q); lifts the factorization to modulus q^k >= target.
inline std::vector<IntPoly> hensel_lift(const IntPoly& f, uint64_t q,
                                        const std::vector<modp::Poly>& h, const Int& target) {
  size_t r = h.size();
  // Bezout data: s_i = (prod_{j != i} h_j)^{-1} mod h_i over F_q.
  std::vector<modp::Poly> s(r);
  for (size_t i = 0; i < r; ++i) {
    modp::Poly prod{1};
    for (size_t j = 0; j < r; ++j)
      if (j != i) prod = modp::mulmod_poly(prod, h[j], h[i], q);
    s[i] = modp::invmod_poly(prod, h[i], q);
  }

  std::vector<IntPoly> lifted(r);
  for (size_t i = 0; i < r; ++i) lifted[i] = modp::to_int_poly(h[i], q);
  // Make representatives with coefficients in [0, q) for the iteration.
  auto nonneg_mod = [](const IntPoly& g, const Int& m) {
    std::vector<Int> c(static_cast<size_t>(g.degree()) + 1);
    for (long i = 0; i <= g.degree(); ++i) {
      Int v = g.coeff(i) % m;
      if (v < 0) v += m;
      c[static_cast<size_t>(i)] = v;
    }
    return IntPoly(std::move(c));
  };
  Int qz(static_cast<unsigned long>(q));
  for (auto& g : lifted) g = nonneg_mod(g, qz);

  Int modulus = qz;
  while (modulus < target) {
    // delta = (f - prod lifted) / modulus  (mod q)
    IntPoly prod = IntPoly::one();
    for (const auto& g : lifted) prod = prod * g;
    IntPoly diff = f - prod;
    std::vector<Int> dc(static_cast<size_t>(std::max<long>(diff.degree(), 0)) + 1, Int(0));
    for (long i = 0; i <= diff.degree(); ++i) {
      Int v = diff.coeff(i);
      require(mpz_divisible_p(v.get_mpz_t(), modulus.get_mpz_t()) != 0,
              "hensel: drift not divisible by modulus");
      dc[static_cast<size_t>(i)] = v / modulus;
    }
    modp::Poly delta = modp::from_int_poly(IntPoly(std::move(dc)), q);
    for (size_t i = 0; i < r; ++i) {
      modp::Poly e = modp::rem(modp::mul(delta, s[i], q), h[i], q);
      IntPoly ei = modp::to_int_poly(e, q);
      lifted[i] = nonneg_mod(lifted[i] + ei * modulus, modulus * qz);
    }
    modulus *= qz;
  }
  // Symmetric representatives.
  Int half = modulus / 2;
  for (auto& g : lifted) {
    std::vector<Int> c(static_cast<size_t>(g.degree()) + 1);
    for (long i = 0; i <= g.degree(); ++i) {
      Int v = g.coeff(i);
      if (v > half) v -= modulus;
      c[static_cast<size_t>(i)] = v;
    }
    g = IntPoly(std::move(c));
  }
  return lifted;
}

// Zassenhaus factorization of a monic squarefree primitive polynomial.
inline std::vector<IntPoly> zassenhaus_monic(const IntPoly& f) {
  long n = f.degree();
  if (n <= 1) return {f};

  // Pick the modular reduction with the fewest factors among a few good primes.
  static const uint64_t kCandidates[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                         53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103};
  uint64_t best_q = 0;
  std::vector<modp::Poly> best_factors;
  std::vector<std::vector<long>> degree_sets;
  int good_primes = 0;
  for (uint64_t q : kCandidates) {
    if (mpz_divisible_ui_p(f.lc().get_mpz_t(), static_cast<unsigned long>(q))) continue;
    modp::Poly fq = modp::from_int_poly(f, q);
    if (modp::deg(fq) != n) continue;
    modp::Poly g = modp::gcd(fq, modp::deriv(fq, q), q);
    if (modp::deg(g) != 0) continue;  // not squarefree mod q
    auto factors = modp::factor_squarefree(modp::monic(fq, q), q, /*seed=*/q * 0x9e3779b97f4a7c15ULL);
    std::vector<long> degs;
    for (const auto& h : factors) degs.push_back(modp::deg(h));
    degree_sets.push_back(degs);
    if (best_q == 0 || factors.size() < best_factors.size()) {
      best_q = q;
      best_factors = std::move(factors);
    }
    if (++good_primes >= 4 || best_factors.size() == 1) break;
  }
  require(best_q != 0, "zassenhaus: no good prime found");
  if (best_factors.size() == 1) return {f};

  // Degrees achievable as subset sums mod every tested prime.
  std::vector<bool> allowed(static_cast<size_t>(n) + 1, true);
  for (const auto& degs : degree_sets) {
    std::vector<bool> sums(static_cast<size_t>(n) + 1, false);
    sums[0] = true;
    for (long d : degs)
      for (long t = n; t >= d; --t)
        if (sums[static_cast<size_t>(t - d)]) sums[static_cast<size_t>(t)] = true;
    for (long t = 0; t <= n; ++t)
      if (!sums[static_cast<size_t>(t)]) allowed[static_cast<size_t>(t)] = false;
  }

  // Mignotte-style bound on factor coefficients: 2^n * ||f||_2.
  Int norm2(0);
  for (long i = 0; i <= n; ++i) norm2 += f.coeff(i) * f.coeff(i);
  Int norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Int bound = (norm << static_cast<unsigned>(n + 1)) + 1;

  std::vector<IntPoly> lifted = hensel_lift(f, best_q, best_factors, bound * 2);

  // Subset recombination, smallest subsets first.
  std::vector<IntPoly> result;
  std::vector<int> alive(lifted.size(), 1);
  IntPoly rest = f;
  Int modulus(1);
  {
    Int qz(static_cast<unsigned long>(best_q));
    while (modulus < bound * 2) modulus *= qz;
  }
  auto sym = [&](IntPoly g) {
    Int half = modulus / 2;
    std::vector<Int> c(static_cast<size_t>(g.degree()) + 1);
    for (long i = 0; i <= g.degree(); ++i) {
      Int v = g.coeff(i) % modulus;
      if (v < 0) v += modulus;
      if (v > half) v -= modulus;
      c[static_cast<size_t>(i)] = v;
    }
    return IntPoly(std::move(c));
  };

  size_t r = lifted.size();
  std::vector<size_t> live_idx;
  auto refresh = [&] {
    live_idx.clear();
    for (size_t i = 0; i < r; ++i)
      if (alive[i]) live_idx.push_back(i);
  };
  refresh();
  long max_subset_ops = 1 << 22;
  for (size_t k = 1; !live_idx.empty() && k <= live_idx.size(); ) {
    if (2 * k > live_idx.size()) {
      // Remaining product is irreducible.
      break;
    }
    // Enumerate k-subsets of live_idx.
    std::vector<size_t> comb(k);
    for (size_t i = 0; i < k; ++i) comb[i] = i;
    bool found = false;
    while (true) {
      require(--max_subset_ops > 0, "zassenhaus: recombination budget exhausted");
      long dsum = 0;
      for (size_t i = 0; i < k; ++i) dsum += lifted[live_idx[comb[i]]].degree();
      if (dsum <= rest.degree() && allowed[static_cast<size_t>(dsum)]) {
        IntPoly cand = IntPoly::one();
        for (size_t i = 0; i < k; ++i) cand = sym(cand * lifted[live_idx[comb[i]]]);
        IntPoly quot;
        if (divides(cand, rest, &quot)) {
          result.push_back(cand.primitive());
          rest = quot;
          for (size_t i = 0; i < k; ++i) alive[live_idx[comb[i]]] = 0;
          refresh();
          found = true;
          break;
        }
      }
      // next combination
      long pos = static_cast<long>(k) - 1;
      while (pos >= 0 && comb[static_cast<size_t>(pos)] ==
                             live_idx.size() - k + static_cast<size_t>(pos))
        --pos;
      if (pos < 0) break;
      ++comb[static_cast<size_t>(pos)];
      for (size_t i = static_cast<size_t>(pos) + 1; i < k; ++i) comb[i] = comb[i - 1] + 1;
    }
    if (!found) ++k;
  }
  if (rest.degree() > 0) result.push_back(rest.primitive());
  return result;
}

}  // namespace detail_factor

struct Factorization {
  Rat unit;  // f = unit * prod factors[i].first ^ factors[i].second
  std::vector<std::pair<IntPoly, int>> factors;
};

// Factor a nonzero integer polynomial into irreducibles over Q.
// Factors are primitive with positive leading coefficient, sorted
// canonically (degree, then coefficients); deterministic.
inline Factorization factor_over_rationals(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_over_rationals: zero polynomial");
  Factorization out;
  Int cont = f.content();
  if (f.lc() < 0) cont = -cont;
  out.unit = Rat(cont);
  IntPoly prim = f.primitive();
  if (prim.degree() == 0) return out;

  for (auto& [sf, mult] : squarefree_decomposition(prim)) {
    if (sf.degree() == 0) continue;
    // Monicize: g(y) = lc^(n-1) f(y/lc) is monic with integer coefficients.
    std::vector<IntPoly> irr;
    if (sf.is_monic()) {
      irr = detail_factor::zassenhaus_monic(sf);
    } else {
      Int l = sf.lc();
      long nd = sf.degree();
      std::vector<Int> c(static_cast<size_t>(nd) + 1);
      // g(y) = lc^(n-1) f(y/lc): coeff_k(g) = coeff_k(f) * lc^(n-1-k).
      c[static_cast<size_t>(nd)] = 1;
      Int pw(1);
      for (long k = nd - 1; k >= 0; --k) {
        c[static_cast<size_t>(k)] = sf.coeff(k) * pw;
        pw *= l;
      }
      IntPoly monicized(std::move(c));
      for (const auto& gk : detail_factor::zassenhaus_monic(monicized))
        irr.push_back(gk.scale_arg(l).primitive());
    }
    std::sort(irr.begin(), irr.end(), [](const IntPoly& a, const IntPoly& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      for (long i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
      return false;
    });
    for (auto& g : irr) out.factors.emplace_back(g, mult);
  }
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first.degree() != b.first.degree())
                       return a.first.degree() < b.first.degree();
                     for (long i = a.first.degree(); i >= 0; --i)
                       if (a.first.coeff(i) != b.first.coeff(i))
                         return a.first.coeff(i) < b.first.coeff(i);
                     return a.second < b.second;
                   });
  // Fix the unit so the product identity holds exactly over Q.
  IntPoly check = IntPoly::one();
  for (auto& [g, m] : out.factors)
    for (int i = 0; i < m; ++i) check = check * g;
  // prim = unit' * check with unit' rational.
  require(check.degree() == prim.degree(), "factor: degree mismatch after recombination");
  Rat unit_fix = Rat(prim.lc()) / Rat(check.lc());
  out.unit *= unit_fix;
  return out;
}

// Spot check that a claimed-irreducible polynomial is consistent with
// irreducibility: modulo several primes where it stays squarefree, no proper
// degree is a subset sum of the modular factor degrees at every prime.
inline bool irreducible_spot_check(const IntPoly& f) {
  require(!f.is_zero() && f.degree() >= 1, "irreducible_spot_check: bad input");
  long n = f.degree();
  std::vector<bool> allowed(static_cast<size_t>(n) + 1, true);
  int tested = 0;
  for (uint64_t q : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                     37ULL, 41ULL, 43ULL, 47ULL}) {
    if (mpz_divisible_ui_p(f.lc().get_mpz_t(), static_cast<unsigned long>(q))) continue;
    modp::Poly fq = modp::from_int_poly(f, q);
    if (modp::deg(fq) != n) continue;
    if (modp::deg(modp::gcd(fq, modp::deriv(fq, q), q)) != 0) continue;
    std::vector<long> degs;
    for (auto& [g, d] : modp::distinct_degree(modp::monic(fq, q), q)) {
      long count = modp::deg(g) / d;
      for (long i = 0; i < count; ++i) degs.push_back(d);
    }
    std::vector<bool> sums(static_cast<size_t>(n) + 1, false);
    sums[0] = true;
    for (long d : degs)
      for (long t = n; t >= d; --t)
        if (sums[static_cast<size_t>(t - d)]) sums[static_cast<size_t>(t)] = true;
    for (long t = 0; t <= n; ++t)
      if (!sums[static_cast<size_t>(t)]) allowed[static_cast<size_t>(t)] = false;
    ++tested;
    bool only_trivial = true;
    for (long t = 1; t < n; ++t)
      if (allowed[static_cast<size_t>(t)]) only_trivial = false;
    if (only_trivial) return true;
    if (tested >= 8) break;
  }
  // Inconclusive by degree sets: fall back to a full factorization.
  auto fac = factor_over_rationals(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

inline bool is_irreducible(const IntPoly& f) {
  require(f.degree() >= 1, "is_irreducible: degree must be >= 1");
  auto fac = factor_over_rationals(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace splitcartan

#endif
