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

#ifndef SPLITCARTAN_MATRIX_HPP
#define SPLITCARTAN_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "splitcartan/numeric.hpp"
#include "splitcartan/polynomial.hpp"

namespace splitcartan {

using QVec = std::vector<Rat>;

// Dense matrix over the rationals, row-major. All arithmetic exact.
class QMatrix {
 public:
  QMatrix() : r_(0), c_(0) {}
  QMatrix(long rows, long cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows * cols), Rat(0)) {}

  static QMatrix identity(long n) {
    QMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  long rows() const { return r_; }
  long cols() const { return c_; }
  Rat& at(long i, long j) { return a_[static_cast<size_t>(i * c_ + j)]; }
  const Rat& at(long i, long j) const { return a_[static_cast<size_t>(i * c_ + j)]; }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  bool is_square() const { return r_ == c_; }

  QMatrix transpose() const {
    QMatrix t(c_, r_);
    for (long i = 0; i < r_; ++i)
      for (long j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    require(a.r_ == b.r_ && a.c_ == b.c_, "QMatrix+: shape mismatch");
    QMatrix m(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
  }
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    require(a.r_ == b.r_ && a.c_ == b.c_, "QMatrix-: shape mismatch");
    QMatrix m(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
  }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    require(a.c_ == b.r_, "QMatrix*: shape mismatch");
    QMatrix m(a.r_, b.c_);
    for (long i = 0; i < a.r_; ++i)
      for (long k = 0; k < a.c_; ++k) {
        const Rat& aik = a.at(i, k);
        if (aik == 0) continue;
        for (long j = 0; j < b.c_; ++j) {
          const Rat& bkj = b.at(k, j);
          if (bkj != 0) m.at(i, j) += aik * bkj;
        }
      }
    return m;
  }
  friend QMatrix operator*(const QMatrix& a, const Rat& s) {
    QMatrix m = a;
    for (auto& v : m.a_) v *= s;
    return m;
  }

  // Row vector times matrix.
  QVec apply_left(const QVec& v) const {
    require(static_cast<long>(v.size()) == r_, "apply_left: size mismatch");
    QVec out(static_cast<size_t>(c_), Rat(0));
    for (long i = 0; i < r_; ++i) {
      if (v[static_cast<size_t>(i)] == 0) continue;
      const Rat& vi = v[static_cast<size_t>(i)];
      for (long j = 0; j < c_; ++j) {
        const Rat& m = at(i, j);
        if (m != 0) out[static_cast<size_t>(j)] += vi * m;
      }
    }
    return out;
  }

  // Reduced row echelon form in place; returns pivot column list.
  std::vector<long> rref() {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < c_ && row < r_; ++col) {
      long sel = -1;
      for (long i = row; i < r_; ++i)
        if (at(i, col) != 0) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      if (sel != row)
        for (long j = 0; j < c_; ++j) std::swap(at(sel, j), at(row, j));
      Rat inv = 1 / at(row, col);
      for (long j = col; j < c_; ++j) at(row, j) *= inv;
      for (long i = 0; i < r_; ++i) {
        if (i == row) continue;
        const Rat f = at(i, col);
        if (f == 0) continue;
        for (long j = col; j < c_; ++j) at(i, j) -= f * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  long rank() const {
    QMatrix m = *this;
    return static_cast<long>(m.rref().size());
  }

  // Basis of the right kernel {x : M x = 0}, returned as rows in RREF.
  QMatrix kernel() const {
    QMatrix m = *this;
    std::vector<long> pivots = m.rref();
    std::vector<bool> is_pivot(static_cast<size_t>(c_), false);
    for (long p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    long k = c_ - static_cast<long>(pivots.size());
    QMatrix ker(k, c_);
    long idx = 0;
    for (long col = 0; col < c_; ++col) {
      if (is_pivot[static_cast<size_t>(col)]) continue;
      ker.at(idx, col) = 1;
      for (size_t pr = 0; pr < pivots.size(); ++pr)
        ker.at(idx, pivots[pr]) = -m.at(static_cast<long>(pr), col);
      ++idx;
    }
    return ker;
  }

  // Basis of {v : v M = 0} (v a row vector), as RREF rows.
  QMatrix left_kernel() const { return transpose().kernel(); }

  std::vector<Rat>& data() { return a_; }
  const std::vector<Rat>& data() const { return a_; }

 private:
  long r_, c_;
  std::vector<Rat> a_;
};

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

inline uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

// Fixed, deterministic sequence of word-size primes for multimodular work.
inline const std::vector<uint64_t>& crt_primes() {
  static const std::vector<uint64_t> primes = [] {
    std::vector<uint64_t> ps;
    Int p = Int(1) << 62;
    for (int i = 0; i < 512; ++i) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      ps.push_back(static_cast<uint64_t>(mpz_get_ui(p.get_mpz_t())));
    }
    return ps;
  }();
  return primes;
}

// Characteristic polynomial of a matrix over F_p by Hessenberg reduction
// (Cohen, Algorithm 2.2.9). Returns monic coefficients, ascending.
inline std::vector<uint64_t> charpoly_mod_p(std::vector<uint64_t> h, long n, uint64_t p) {
  auto at = [&](long i, long j) -> uint64_t& { return h[static_cast<size_t>(i * n + j)]; };
  // Reduce to upper Hessenberg form.
  for (long m = 1; m + 1 < n; ++m) {
    long piv = -1;
    for (long i = m; i < n; ++i)
      if (at(i, m - 1) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != m) {
      for (long j = 0; j < n; ++j) std::swap(at(piv, j), at(m, j));
      for (long i = 0; i < n; ++i) std::swap(at(i, piv), at(i, m));
    }
    uint64_t inv = invmod_u64(at(m, m - 1), p);
    for (long i = m + 1; i < n; ++i) {
      uint64_t u = at(i, m - 1);
      if (u == 0) continue;
      uint64_t t = mulmod_u64(u, inv, p);
      for (long j = 0; j < n; ++j) {
        uint64_t sub = mulmod_u64(t, at(m, j), p);
        at(i, j) = (at(i, j) + p - sub) % p;
      }
      // Column operation preserving similarity.
      for (long i2 = 0; i2 < n; ++i2) {
        uint64_t add = mulmod_u64(t, at(i2, i), p);
        at(i2, m) = (at(i2, m) + add) % p;
      }
    }
  }
  // p_m(x) = (x - h[m][m]) p_{m-1}(x) - sum_i h[i][m] (prod subdiag) p_{i-1}(x).
  std::vector<std::vector<uint64_t>> polys(static_cast<size_t>(n) + 1);
  polys[0] = {1};
  for (long m = 1; m <= n; ++m) {
    const auto& prev = polys[static_cast<size_t>(m - 1)];
    std::vector<uint64_t> cur(static_cast<size_t>(m) + 1, 0);
    for (size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = (cur[i + 1] + prev[i]) % p;
      uint64_t sub = mulmod_u64(at(m - 1, m - 1), prev[i], p);
      cur[i] = (cur[i] + p - sub) % p;
    }
    uint64_t prod = 1;
    for (long i = m - 1; i >= 1; --i) {
      prod = mulmod_u64(prod, at(i, i - 1), p);
      if (prod == 0) break;
      uint64_t coef = mulmod_u64(at(i - 1, m - 1), prod, p);
      if (coef == 0) continue;
      const auto& pi = polys[static_cast<size_t>(i - 1)];
      for (size_t j = 0; j < pi.size(); ++j) {
        uint64_t sub = mulmod_u64(coef, pi[j], p);
        cur[j] = (cur[j] + p - sub) % p;
      }
    }
    polys[static_cast<size_t>(m)] = std::move(cur);
  }
  return polys[static_cast<size_t>(n)];
}

}  // namespace detail

// Monic characteristic polynomial det(xI - m) of a square rational matrix,
// computed by a multimodular Hessenberg method with Chinese remaindering
// against a Hadamard-style coefficient bound. Deterministic.
inline RatPoly charpoly(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly: matrix must be square");
  long n = m.rows();
  if (n == 0) return RatPoly(std::vector<Rat>{Rat(1)});

  // Clear denominators: work with A_int = D*A, then chi_A(x) = D^{-n} chi_int(D x).
  Int den(1);
  for (const auto& v : m.data()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<Int> a(static_cast<size_t>(n * n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Rat scaled = m.at(i, j) * Rat(den);
      a[static_cast<size_t>(i * n + j)] = scaled.get_num();
    }

  // Coefficient bound: |c_k| <= 2^n * prod_i max(1, ||row_i||_2).
  Int bound(1);
  for (long i = 0; i < n; ++i) {
    Int s(0);
    for (long j = 0; j < n; ++j) s += a[static_cast<size_t>(i * n + j)] * a[static_cast<size_t>(i * n + j)];
    Int r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    r += 1;
    if (r > 1) bound *= r;
  }
  bound <<= static_cast<unsigned>(n + 1);  // 2^n minors, plus sign headroom

  const auto& primes = detail::crt_primes();
  Int modulus(1);
  std::vector<Int> coeff(static_cast<size_t>(n) + 1, Int(0));
  size_t pi = 0;
  while (modulus <= bound) {
    require(pi < primes.size(), "charpoly: prime pool exhausted");
    uint64_t p = primes[pi++];
    std::vector<uint64_t> ap(static_cast<size_t>(n * n));
    for (size_t k = 0; k < ap.size(); ++k) {
      Int r = a[k] % Int(static_cast<unsigned long>(p));
      if (r < 0) r += Int(static_cast<unsigned long>(p));
      ap[k] = mpz_get_ui(r.get_mpz_t());
    }
    std::vector<uint64_t> cp = detail::charpoly_mod_p(std::move(ap), n, p);
    if (modulus == 1) {
      for (size_t k = 0; k < cp.size(); ++k) coeff[k] = Int(static_cast<unsigned long>(cp[k]));
      modulus = Int(static_cast<unsigned long>(p));
    } else {
      Int zp = Int(static_cast<unsigned long>(p));
      Int minv;
      require(mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), zp.get_mpz_t()) != 0,
              "charpoly: CRT inverse failed");
      for (size_t k = 0; k <= static_cast<size_t>(n); ++k) {
        Int cur = coeff[k] % zp;
        if (cur < 0) cur += zp;
        Int delta = (Int(static_cast<unsigned long>(cp[k])) - cur) % zp;
        if (delta < 0) delta += zp;
        coeff[k] += modulus * ((delta * minv) % zp);
      }
      modulus *= zp;
    }
  }
  Int half = modulus / 2;
  for (auto& v : coeff)
    if (v > half) v -= modulus;

  // Undo the denominator scaling: c_k(A) = c_k(A_int) / D^{n-k}.
  std::vector<Rat> out(static_cast<size_t>(n) + 1);
  Int dpow(1);
  for (long k = n; k >= 0; --k) {
    out[static_cast<size_t>(k)] = Rat(coeff[static_cast<size_t>(k)]) / Rat(dpow);
    dpow *= den;
  }
  return RatPoly(std::move(out));
}

// Evaluate a polynomial at a square matrix (Horner).
inline QMatrix eval_at_matrix(const RatPoly& f, const QMatrix& m) {
  require(m.is_square(), "eval_at_matrix: matrix must be square");
  long n = m.rows();
  QMatrix acc(n, n);
  if (f.is_zero()) return acc;
  for (long i = f.degree(); i >= 0; --i) {
    if (i < f.degree()) acc = acc * m;
    if (f.coeff(i) != 0) {
      const Rat& c = f.coeff(i);
      for (long d = 0; d < n; ++d) acc.at(d, d) += c;
    }
  }
  return acc;
}

}  // namespace splitcartan

#endif
