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

#ifndef SPLITCARTAN_POLYNOMIAL_HPP
#define SPLITCARTAN_POLYNOMIAL_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "splitcartan/numeric.hpp"

namespace splitcartan {

// Dense univariate polynomial with exact integer coefficients, ascending
// degree. Invariant: leading coefficient nonzero unless the polynomial is
// zero (empty coefficient vector).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return IntPoly({1}); }
  static IntPoly x_power(long k) {
    std::vector<Int> c(static_cast<size_t>(k) + 1, Int(0));
    c.back() = 1;
    return IntPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Int& lc() const {
    require(!c_.empty(), "IntPoly::lc on zero polynomial");
    return c_.back();
  }
  const Int& coeff(long i) const {
    static const Int kZero(0);
    if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
  }
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a) {
    std::vector<Int> c = a.c_;
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
  }
  friend IntPoly operator*(const IntPoly& a, const Int& s) {
    std::vector<Int> c = a.c_;
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
  }

  IntPoly derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(c));
  }

  Int eval(const Int& x) const {
    Int acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
  }

  Int content() const {
    Int g(0);
    for (const auto& v : c_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  // Primitive part with positive leading coefficient.
  IntPoly primitive() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (lc() < 0) g = -g;
    std::vector<Int> c = c_;
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
  }

  // f(-x) scaled by (-1)^deg so that a monic input stays monic.
  IntPoly sign_twist() const {
    if (is_zero()) return IntPoly();
    std::vector<Int> c = c_;
    long d = degree();
    for (long i = 0; i <= d; ++i)
      if ((d - i) % 2 != 0) c[static_cast<size_t>(i)] = -c[static_cast<size_t>(i)];
    return IntPoly(std::move(c));
  }

  // f(s*x), useful for the monicization transform in factoring.
  IntPoly scale_arg(const Int& s) const {
    std::vector<Int> c = c_;
    Int pw(1);
    for (size_t i = 0; i < c.size(); ++i) {
      c[i] *= pw;
      pw *= s;
    }
    return IntPoly(std::move(c));
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      const Int& a = coeff(i);
      if (a == 0) continue;
      Int abs_a = abs(a);
      if (first) {
        if (a < 0) os << "-";
        first = false;
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      if (i == 0 || abs_a != 1) os << abs_a.get_str();
      if (i > 0) {
        if (abs_a != 1) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

// Exact division, asserting divisibility over Z.
inline IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero(), "divexact: division by zero polynomial");
  if (a.is_zero()) return IntPoly();
  require(a.degree() >= b.degree(), "divexact: not divisible (degree)");
  std::vector<Int> rem(a.coeffs());
  std::vector<Int> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Int(0));
  for (long i = a.degree() - b.degree(); i >= 0; --i) {
    Int top = rem[static_cast<size_t>(i + b.degree())];
    if (top == 0) continue;
    Int qi;
    require(mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t()) != 0, "divexact: not divisible (lc)");
    mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
    q[static_cast<size_t>(i)] = qi;
    for (long j = 0; j <= b.degree(); ++j) rem[static_cast<size_t>(i + j)] -= qi * b.coeff(j);
  }
  for (const auto& v : rem) require(v == 0, "divexact: nonzero remainder");
  return IntPoly(std::move(q));
}

inline bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) {
    if (quotient) *quotient = IntPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Int> rem(a.coeffs());
  std::vector<Int> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Int(0));
  for (long i = a.degree() - b.degree(); i >= 0; --i) {
    Int top = rem[static_cast<size_t>(i + b.degree())];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t()) == 0) return false;
    Int qi;
    mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
    q[static_cast<size_t>(i)] = qi;
    for (long j = 0; j <= b.degree(); ++j) rem[static_cast<size_t>(i + j)] -= qi * b.coeff(j);
  }
  for (const auto& v : rem)
    if (v != 0) return false;
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero(), "pseudo_rem: zero divisor");
  IntPoly r = a;
  long db = b.degree();
  const Int& lb = b.lc();
  long steps = a.degree() - db + 1;
  if (steps <= 0) return r;
  while (!r.is_zero() && r.degree() >= db) {
    long shift = r.degree() - db;
    Int top = r.lc();
    std::vector<Int> nc(r.coeffs());
    for (auto& v : nc) v *= lb;
    for (long j = 0; j <= db; ++j) nc[static_cast<size_t>(shift + j)] -= top * b.coeff(j);
    r = IntPoly(std::move(nc));
    --steps;
  }
  // Pad remaining lc powers so the identity holds with the fixed exponent.
  while (steps-- > 0) r = r * lb;
  return r;
}

// GCD over Z via the primitive pseudo-remainder sequence.
inline IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = a0.is_zero() ? IntPoly() : a0.primitive();
  IntPoly b = b0.is_zero() ? IntPoly() : b0.primitive();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  Int ca = a0.content(), cb = b0.content(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b);
    a = b;
    b = r.is_zero() ? IntPoly() : r.primitive();
  }
  return a.primitive() * cg;
}

inline bool is_squarefree(const IntPoly& f) {
  require(!f.is_zero(), "is_squarefree: zero polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

// Yun's squarefree decomposition of a primitive polynomial:
// f = prod_i g_i^i with the g_i squarefree and pairwise coprime.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f0) {
  require(!f0.is_zero(), "squarefree_decomposition: zero polynomial");
  IntPoly f = f0.primitive();
  std::vector<std::pair<IntPoly, int>> out;
  if (f.degree() == 0) return out;
  IntPoly d = f.derivative();
  IntPoly a = gcd(f, d);
  IntPoly b = divexact(f, a);
  IntPoly z = divexact(d, a) - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    if (z.is_zero()) {
      out.emplace_back(b.primitive(), i);
      break;
    }
    IntPoly g = gcd(b, z);
    if (g.degree() > 0) out.emplace_back(g.primitive(), i);
    b = divexact(b, g);
    z = divexact(z, g) - b.derivative();
    ++i;
  }
  return out;
}

// Newton power sums s_1..s_nmax of the complex roots of a monic integer
// polynomial, computed from the coefficients alone (no root extraction).
inline std::vector<Int> power_sums(const IntPoly& f, long n_max) {
  if (f.is_zero() || !f.is_monic())
    throw std::invalid_argument("power_sums: polynomial must be monic");
  long n = f.degree();
  // e_k = (-1)^k * coeff(n-k) are the elementary symmetric functions.
  std::vector<Int> e(static_cast<size_t>(n) + 1);
  e[0] = 1;
  for (long k = 1; k <= n; ++k) {
    e[static_cast<size_t>(k)] = f.coeff(n - k);
    if (k % 2 != 0) e[static_cast<size_t>(k)] = -e[static_cast<size_t>(k)];
  }
  std::vector<Int> s(static_cast<size_t>(n_max) + 1, Int(0));
  for (long k = 1; k <= n_max; ++k) {
    Int acc(0);
    long top = std::min(k - 1, n);
    for (long i = 1; i <= top; ++i) {
      Int term = e[static_cast<size_t>(i)] * s[static_cast<size_t>(k - i)];
      if (i % 2 == 0) acc -= term; else acc += term;
    }
    if (k <= n) {
      Int term = e[static_cast<size_t>(k)] * Int(k);
      if (k % 2 == 0) acc -= term; else acc += term;
    }
    s[static_cast<size_t>(k)] = acc;
  }
  s.erase(s.begin());
  return s;
}

// Polynomial with exact rational coefficients; used for characteristic
// polynomials of rational matrices and the Sturm chain.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
  explicit RatPoly(const IntPoly& p) {
    c_.reserve(static_cast<size_t>(p.degree()) + 1);
    for (long i = 0; i <= p.degree(); ++i) c_.emplace_back(p.coeff(i));
    normalize();
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rat& coeff(long i) const {
    static const Rat kZero(0);
    if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
  }
  const Rat& lc() const {
    require(!c_.empty(), "RatPoly::lc on zero polynomial");
    return c_.back();
  }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPoly(std::move(c));
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return RatPoly(std::move(c));
  }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(c));
  }
  friend RatPoly operator*(const RatPoly& a, const Rat& s) {
    std::vector<Rat> c = a.c_;
    for (auto& v : c) v *= s;
    return RatPoly(std::move(c));
  }

  RatPoly derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(c));
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  RatPoly monic() const {
    require(!is_zero(), "RatPoly::monic of zero");
    std::vector<Rat> c = c_;
    Rat inv = 1 / c.back();
    for (auto& v : c) v *= inv;
    return RatPoly(std::move(c));
  }

  // Remainder of Euclidean division.
  RatPoly rem(const RatPoly& b) const {
    require(!b.is_zero(), "RatPoly::rem by zero");
    std::vector<Rat> r = c_;
    long db = b.degree();
    while (static_cast<long>(r.size()) - 1 >= db) {
      while (!r.empty() && r.back() == 0) r.pop_back();
      if (static_cast<long>(r.size()) - 1 < db) break;
      Rat q = r.back() / b.lc();
      long shift = static_cast<long>(r.size()) - 1 - db;
      for (long j = 0; j <= db; ++j) r[static_cast<size_t>(shift + j)] -= q * b.coeff(j);
      r.pop_back();
    }
    return RatPoly(std::move(r));
  }

  // True when every coefficient is an integer.
  bool is_integral() const {
    for (const auto& v : c_)
      if (v.get_den() != 1) return false;
    return true;
  }

  IntPoly to_int_poly() const {
    require(is_integral(), "RatPoly::to_int_poly: non-integral coefficient");
    std::vector<Int> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v.get_num());
    return IntPoly(std::move(c));
  }

  // Primitive integer polynomial with the same roots (clears denominators).
  IntPoly primitive_int() const {
    require(!is_zero(), "RatPoly::primitive_int of zero");
    Int den(1);
    for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> c;
    c.reserve(c_.size());
    for (const auto& v : c_) {
      Rat scaled = v * Rat(den);
      c.push_back(scaled.get_num());
    }
    return IntPoly(std::move(c)).primitive();
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      const Rat& a = coeff(i);
      if (a == 0) continue;
      Rat abs_a = abs(a);
      if (first) {
        if (a < 0) os << "-";
        first = false;
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      if (i == 0 || abs_a != 1) os << abs_a.get_str();
      if (i > 0) {
        if (abs_a != 1) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Number of distinct real roots, by Sturm's chain.
inline long count_real_roots(const RatPoly& f0) {
  require(!f0.is_zero(), "count_real_roots: zero polynomial");
  RatPoly f = f0;
  // Work with the squarefree part.
  RatPoly g = f.derivative();
  if (!g.is_zero()) {
    RatPoly a = f, b = g;
    while (!b.is_zero()) {
      RatPoly r = a.rem(b);
      a = b;
      b = r;
    }
    if (a.degree() > 0) {
      // Divide out gcd via exact division (rem of quotient is zero).
      RatPoly q;
      {
        std::vector<Rat> num = f.coeffs();
        std::vector<Rat> qq(static_cast<size_t>(f.degree() - a.degree()) + 1, Rat(0));
        for (long i = f.degree() - a.degree(); i >= 0; --i) {
          Rat top = num[static_cast<size_t>(i + a.degree())];
          Rat qi = top / a.lc();
          qq[static_cast<size_t>(i)] = qi;
          for (long j = 0; j <= a.degree(); ++j) num[static_cast<size_t>(i + j)] -= qi * a.coeff(j);
        }
        q = RatPoly(std::move(qq));
      }
      f = q;
    }
  }
  if (f.degree() == 0) return 0;
  std::vector<RatPoly> chain{f, f.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    RatPoly r = chain[chain.size() - 2].rem(chain.back());
    std::vector<Rat> neg = r.coeffs();
    for (auto& v : neg) v = -v;
    chain.emplace_back(std::move(neg));
  }
  auto sign_at_inf = [](const RatPoly& p, int dir) -> int {
    if (p.is_zero()) return 0;
    int s = sgn(p.lc());
    if (dir < 0 && p.degree() % 2 != 0) s = -s;
    return s;
  };
  auto variations = [&](int dir) {
    long v = 0;
    int prev = 0;
    for (const auto& p : chain) {
      int s = sign_at_inf(p, dir);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  return variations(-1) - variations(+1);
}

}  // namespace splitcartan

#endif
