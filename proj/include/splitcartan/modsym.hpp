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

#ifndef SPLITCARTAN_MODSYM_HPP
#define SPLITCARTAN_MODSYM_HPP

#include <array>
#include <map>
#include <memory>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "splitcartan/matrix.hpp"
#include "splitcartan/numeric.hpp"

namespace splitcartan {

// The projective line P^1(Z/NZ) with canonical representatives.
// A class (c : d) is valid iff gcd(c, d, N) = 1.
class P1 {
 public:
  explicit P1(long n) : n_(n) {
    require(n >= 1, "P1: N >= 1");
    if (n_ == 1) {
      reps_.emplace_back(0, 0);
      index_[key(0, 0)] = 0;
      return;
    }
    for (long u = 0; u < n_; ++u)
      for (long v = 0; v < n_; ++v) {
        if (std::gcd(std::gcd(u, v), n_) != 1) continue;
        auto [cu, cv] = normalize(u, v);
        if (cu == u && cv == v) {
          index_[key(u, v)] = static_cast<long>(reps_.size());
          reps_.emplace_back(u, v);
        }
      }
  }

  long level() const { return n_; }
  long size() const { return static_cast<long>(reps_.size()); }
  const std::pair<long, long>& rep(long i) const { return reps_[static_cast<size_t>(i)]; }

  // Canonical representative of (u : v); u, v arbitrary integers.
  std::pair<long, long> normalize(long u, long v) const {
    if (n_ == 1) return {0, 0};
    u = mod_long(u, n_);
    v = mod_long(v, n_);
    require(std::gcd(std::gcd(u, v), n_) == 1, "P1::normalize: invalid class");
    if (u == 0) return {0, 1};
    long g = std::gcd(u, n_);
    long m = n_ / g;  // modulus for the residual unit freedom
    long u1 = u / g;
    long w = invmod_long(u1 % m, m);
    // Lift w to a unit modulo N.
    long wl = w;
    while (std::gcd(wl, n_) != 1) wl += m;
    long v0 = mod_long((wl % n_) * (v % n_), n_);
    long best = v0;
    long mult = 1;
    for (long k = 1; k < g; ++k) {
      mult = mod_long(mult + m, n_);
      if (std::gcd(mult, n_) != 1) continue;
      long cand = mod_long(mult * v0, n_);
      if (cand < best) best = cand;
    }
    return {g, best};
  }

  // Index of (u : v), or -1 when gcd(u, v, N) > 1.
  long index_of(long u, long v) const {
    if (n_ == 1) return 0;
    u = mod_long(u, n_);
    v = mod_long(v, n_);
    if (std::gcd(std::gcd(u, v), n_) != 1) return -1;
    auto [cu, cv] = normalize(u, v);
    auto it = index_.find(key(cu, cv));
    require(it != index_.end(), "P1::index_of: normalized class missing");
    return it->second;
  }

  // Lift class i to a matrix [[a,b],[c,d]] in SL_2(Z) with (c:d) in class i.
  std::array<long, 4> lift_to_sl2(long i) const {
    auto [c, d] = reps_[static_cast<size_t>(i)];
    if (n_ == 1) return {1, 0, 0, 1};
    if (c == 0) return {1, 0, 0, 1};  // class (0:1)
    long dd = d;
    while (std::gcd(c, dd) != 1) dd += n_;
    long x, y;
    long g = xgcd_long(c, dd, x, y);
    require(g == 1, "lift_to_sl2: gcd");
    // y*c + x*dd would be wrong ordering; we have c*x + dd*y = 1.
    // Matrix [[y, -x], [c, dd]] has det y*dd + x*c = 1.
    return {y, -x, c, dd};
  }

 private:
  static long key(long u, long v) { return (u << 21) ^ v; }
  long n_;
  std::vector<std::pair<long, long>> reps_;
  std::unordered_map<long, long> index_;
};

// Sparse row over the quotient basis.
using SparseRow = std::vector<std::pair<long, Rat>>;

namespace detail_ms {

inline void axpy(QVec& dense, const SparseRow& row, const Rat& scale) {
  if (scale == 0) return;
  for (const auto& [j, v] : row) dense[static_cast<size_t>(j)] += v * scale;
}

}  // namespace detail_ms

// A subspace of the ambient symbol space, stored as RREF rows.
struct Subspace {
  QMatrix rows;               // k x ambient
  std::vector<long> pivots;   // pivot columns of the RREF

  long dim() const { return rows.rows(); }
  long ambient() const { return rows.cols(); }

  static Subspace from_rows(QMatrix m) {
    Subspace s;
    std::vector<long> piv = m.rref();
    // Drop zero rows.
    long k = static_cast<long>(piv.size());
    QMatrix r(k, m.cols());
    for (long i = 0; i < k; ++i)
      for (long j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j);
    s.rows = std::move(r);
    s.pivots = std::move(piv);
    return s;
  }

  // Coordinates of an ambient row vector lying in this subspace.
  QVec coordinates(const QVec& v, bool verify = true) const {
    QVec coords(static_cast<size_t>(dim()));
    for (long i = 0; i < dim(); ++i) coords[static_cast<size_t>(i)] = v[static_cast<size_t>(pivots[static_cast<size_t>(i)])];
    if (verify) {
      QVec rec(static_cast<size_t>(ambient()), Rat(0));
      for (long i = 0; i < dim(); ++i)
        for (long j = 0; j < ambient(); ++j) rec[static_cast<size_t>(j)] += coords[static_cast<size_t>(i)] * rows.at(i, j);
      require(rec == v, "Subspace::coordinates: vector not in subspace");
    }
    return coords;
  }

  // Matrix of an ambient operator (rows = images) restricted to this subspace.
  QMatrix restrict_operator(const QMatrix& op, bool verify = true) const {
    QMatrix m(dim(), dim());
    for (long i = 0; i < dim(); ++i) {
      QVec bi(static_cast<size_t>(ambient()));
      for (long j = 0; j < ambient(); ++j) bi[static_cast<size_t>(j)] = rows.at(i, j);
      QVec img = op.apply_left(bi);
      QVec coords = coordinates(img, verify);
      for (long j = 0; j < dim(); ++j) m.at(i, j) = coords[static_cast<size_t>(j)];
    }
    return m;
  }

  // Subspace of the ambient space spanned by (coefficient rows) x (this).
  Subspace compose(const QMatrix& coeff_rows) const {
    return from_rows(coeff_rows * rows);
  }
};

// Weight-2 modular symbols for Gamma_0(N) over Q, in the Manin-symbol
// presentation. Immutable once constructed; operators are pure functions
// of the frozen space and safe to compute concurrently.
class ModularSymbolSpace {
 public:
  explicit ModularSymbolSpace(long n, long level_cap = 2000) : n_(n), p1_(n) {
    if (n < 1 || n > level_cap)
      throw std::invalid_argument("ModularSymbolSpace: level out of range (cap " +
                                  std::to_string(level_cap) + ")");
    build_quotient();
    build_boundary();
    cuspidal_ = Subspace::from_rows(boundary_.left_kernel());
    require(cuspidal_.dim() == 2 * genus_x0(n_), "cuspidal dimension != 2 * genus");
    {
      QMatrix star_c = cuspidal_.restrict_operator(star_matrix());
      for (long i = 0; i < star_c.rows(); ++i) star_c.at(i, i) -= 1;
      cuspidal_plus_ = cuspidal_.compose(star_c.left_kernel());
      require(cuspidal_plus_.dim() == genus_x0(n_), "cuspidal_plus dimension != genus");
    }
  }

  long level() const { return n_; }
  long dim() const { return dim_; }
  const P1& p1() const { return p1_; }
  long n_cusps() const { return static_cast<long>(cusp_reps_.size()); }

  // Reduction of the Manin symbol (c : d) to the quotient basis.
  const SparseRow& gen_row(long p1_index) const { return gen_rows_[static_cast<size_t>(p1_index)]; }

  QVec symbol_vector(long c, long d) const {
    QVec v(static_cast<size_t>(dim_), Rat(0));
    long idx = p1_.index_of(c, d);
    if (idx >= 0) detail_ms::axpy(v, gen_rows_[static_cast<size_t>(idx)], Rat(1));
    return v;
  }

  // Modular symbol {oo -> a/b} expressed in the quotient basis, by Manin's
  // continued-fraction trick. b = 0 encodes the cusp oo itself.
  QVec path_from_infinity(const Int& a, const Int& b) const {
    QVec v(static_cast<size_t>(dim_), Rat(0));
    if (b == 0) return v;
    // Convergents p_k/q_k of a/b; {oo -> a/b} = sum_k [h_k] with the
    // Manin symbol of h_k determined by its bottom row (q_k, +-q_{k-1}).
    Int num = a, den = b;
    Int p_prev(1), q_prev(0);  // p_{-1}/q_{-1} = oo
    Int p_cur, q_cur;
    bool first = true;
    int k = 0;
    while (den != 0) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      Int r = num - q * den;
      if (first) {
        p_cur = q;
        q_cur = 1;
        first = false;
      } else {
        Int pn = q * p_cur + p_prev;
        Int qn = q * q_cur + q_prev;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = pn;
        q_cur = qn;
      }
      // Manin symbol with bottom row (q_k, (-1)^{k-1} q_{k-1}).
      Int second = q_prev;
      if (k % 2 == 0) second = -second;
      long cc = static_cast<long>(mpz_fdiv_ui(q_cur.get_mpz_t(), static_cast<unsigned long>(n_)));
      Int sm = second % Int(n_);
      if (sm < 0) sm += Int(n_);
      long dd = static_cast<long>(mpz_get_ui(sm.get_mpz_t()));
      long idx = p1_.index_of(cc, dd);
      require(idx >= 0, "path_from_infinity: invalid symbol class");
      detail_ms::axpy(v, gen_rows_[static_cast<size_t>(idx)], Rat(1));
      num = den;
      den = r;
      ++k;
    }
    return v;
  }

  // {alpha -> beta} with cusps given as integer pairs (num, den).
  QVec path_vector(const Int& a1, const Int& b1, const Int& a2, const Int& b2) const {
    QVec v = path_from_infinity(a2, b2);
    QVec u = path_from_infinity(a1, b1);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= u[i];
    return v;
  }

  // Boundary map to the cusp class group: row i = boundary of basis symbol i.
  const QMatrix& boundary_matrix() const { return boundary_; }

  // Star involution (complex conjugation): (c : d) -> (-c : d).
  QMatrix star_matrix() const {
    QMatrix m(dim_, dim_);
    for (long i = 0; i < dim_; ++i) {
      auto [c, d] = p1_.rep(basis_gen_[static_cast<size_t>(i)]);
      long idx = p1_.index_of(-c, d);
      require(idx >= 0, "star: invalid image");
      for (const auto& [j, val] : gen_rows_[static_cast<size_t>(idx)]) m.at(i, j) += val;
    }
    return m;
  }

  // Hecke operator T_n via Merel's family of integer matrices
  // {[[a,b],[c,d]] : det = n, a > b >= 0, d > c >= 0}.
  QMatrix hecke_matrix(long n) const {
    require(n >= 2, "hecke_matrix: n >= 2");
    auto mats = merel_matrices(n);
    QMatrix m(dim_, dim_);
    for (long i = 0; i < dim_; ++i) {
      auto [c, d] = p1_.rep(basis_gen_[static_cast<size_t>(i)]);
      QVec acc(static_cast<size_t>(dim_), Rat(0));
      for (const auto& h : mats) {
        long cc = c * h[0] + d * h[2];
        long dd = c * h[1] + d * h[3];
        long idx = p1_.index_of(cc, dd);
        if (idx < 0) continue;
        detail_ms::axpy(acc, gen_rows_[static_cast<size_t>(idx)], Rat(1));
      }
      for (long j = 0; j < dim_; ++j) m.at(i, j) = acc[static_cast<size_t>(j)];
    }
    return m;
  }

  // Fricke involution w_N: {a -> b} -> {-1/(N a) -> -1/(N b)}.
  QMatrix fricke_matrix() const {
    QMatrix m(dim_, dim_);
    for (long i = 0; i < dim_; ++i) {
      auto g = p1_.lift_to_sl2(basis_gen_[static_cast<size_t>(i)]);
      // [g] = {b/d -> a/c}; W(x/y) = (-y, N x).
      Int a(g[0]), b(g[1]), c(g[2]), d(g[3]);
      QVec img = path_vector(-d, Int(n_) * b, -c, Int(n_) * a);
      for (long j = 0; j < dim_; ++j) m.at(i, j) = img[static_cast<size_t>(j)];
    }
    return m;
  }

  // Degeneracy map down to level M (M | N), induced by z -> t z for t | N/M.
  // Rows map this space's basis to the target space's coordinates.
  QMatrix degeneracy_matrix(const ModularSymbolSpace& target, long t) const {
    long m_level = target.level();
    require(m_level >= 1 && n_ % m_level == 0, "degeneracy: target level must divide");
    require(t >= 1 && (n_ / m_level) % t == 0, "degeneracy: t must divide N/M");
    QMatrix m(dim_, target.dim());
    for (long i = 0; i < dim_; ++i) {
      auto g = p1_.lift_to_sl2(basis_gen_[static_cast<size_t>(i)]);
      if (t == 1) {
        long idx = target.p1().index_of(g[2], g[3]);
        require(idx >= 0, "degeneracy: invalid reduced class");
        for (const auto& [j, val] : target.gen_row(idx)) m.at(i, j) += val;
      } else {
        Int a(g[0]), b(g[1]), c(g[2]), d(g[3]);
        // {b/d -> a/c} maps to {t b/d -> t a/c}.
        QVec img = target.path_vector(Int(t) * b, d, Int(t) * a, c);
        for (long j = 0; j < target.dim(); ++j) m.at(i, j) = img[static_cast<size_t>(j)];
      }
    }
    return m;
  }

  // Cuspidal subspace: kernel of the boundary map. Built eagerly in the
  // constructor so a frozen space is safely shareable across threads.
  const Subspace& cuspidal() const { return cuspidal_; }

  // +1 eigenspace of the star involution inside the cuspidal subspace.
  // Each Galois orbit of newforms appears exactly once here, so dimensions
  // on this quotient equal dimensions of the attached abelian varieties.
  const Subspace& cuspidal_plus() const { return cuspidal_plus_; }

  const std::vector<long>& basis_gens() const { return basis_gen_; }

  static std::vector<std::array<long, 4>> merel_matrices(long n) {
    std::vector<std::array<long, 4>> out;
    for (long a = 1; a <= n; ++a) {
      for (long d = (n + a - 1) / a; a + d <= n + 1; ++d) {
        long m = a * d - n;
        if (m < 0) continue;
        if (m == 0) {
          for (long c = 0; c < d; ++c) out.push_back({a, 0, c, d});
          for (long b = 1; b < a; ++b) out.push_back({a, b, 0, d});
        } else {
          for (long b = 1; b < a; ++b) {
            if (m % b != 0) continue;
            long c = m / b;
            if (c < d) out.push_back({a, b, c, d});
          }
        }
      }
    }
    return out;
  }

 private:
  void build_quotient() {
    long ngens = p1_.size();
    // Step 1: two-term relations x + x*sigma = 0, sigma = [[0,-1],[1,0]].
    // pair_to_[i] = (j, sign): x_i = sign * x_j with j a kept generator,
    // or sign = 0 when forced to zero.
    std::vector<long> pair_to(static_cast<size_t>(ngens), -1);
    std::vector<int> pair_sign(static_cast<size_t>(ngens), 0);
    std::vector<long> kept;
    for (long i = 0; i < ngens; ++i) {
      if (pair_to[static_cast<size_t>(i)] != -1) continue;
      auto [c, d] = p1_.rep(i);
      long j = p1_.index_of(d, -c);
      require(j >= 0, "sigma image invalid");
      if (j == i) {
        pair_to[static_cast<size_t>(i)] = i;
        pair_sign[static_cast<size_t>(i)] = 0;  // 2x = 0
      } else {
        pair_to[static_cast<size_t>(i)] = i;
        pair_sign[static_cast<size_t>(i)] = 1;
        pair_to[static_cast<size_t>(j)] = i;
        pair_sign[static_cast<size_t>(j)] = -1;
        kept.push_back(i);
      }
    }
    // Step 2: three-term relations x + x*tau + x*tau^2 = 0,
    // tau = [[0,-1],[1,-1]], expressed over kept generators.
    std::vector<long> kept_pos(static_cast<size_t>(ngens), -1);
    for (size_t k = 0; k < kept.size(); ++k) kept_pos[static_cast<size_t>(kept[k])] = static_cast<long>(k);
    long nk = static_cast<long>(kept.size());

    std::vector<std::map<long, Rat>> relations;
    std::vector<bool> seen(static_cast<size_t>(ngens), false);
    for (long i = 0; i < ngens; ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      auto [c, d] = p1_.rep(i);
      long i1 = p1_.index_of(d, -c - d);
      auto [c1, d1] = p1_.rep(i1);
      long i2 = p1_.index_of(d1, -c1 - d1);
      seen[static_cast<size_t>(i)] = seen[static_cast<size_t>(i1)] = seen[static_cast<size_t>(i2)] = true;
      std::map<long, Rat> row;
      for (long g : {i, i1, i2}) {
        long rep = pair_to[static_cast<size_t>(g)];
        int sgn = pair_sign[static_cast<size_t>(g)];
        if (sgn == 0) continue;
        long pos = kept_pos[static_cast<size_t>(rep)];
        row[pos] += sgn;
      }
      // drop zero entries
      for (auto it = row.begin(); it != row.end();) {
        if (it->second == 0) it = row.erase(it); else ++it;
      }
      if (!row.empty()) relations.push_back(std::move(row));
    }

    // Step 3: sparse incremental RREF of the relation rows.
    std::vector<std::map<long, Rat>> pivot_rows;          // fully reduced
    std::unordered_map<long, long> pivot_of_col;          // col -> pivot_rows idx
    std::unordered_map<long, std::vector<long>> col_uses; // col -> pivot rows containing it
    for (auto& row : relations) {
      // Reduce against existing pivots.
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto it = row.begin(); it != row.end(); ++it) {
          auto p = pivot_of_col.find(it->first);
          if (p == pivot_of_col.end()) continue;
          Rat factor = it->second;
          const auto& prow = pivot_rows[static_cast<size_t>(p->second)];
          for (const auto& [col, val] : prow) {
            auto& entry = row[col];
            entry -= factor * val;
            if (entry == 0) row.erase(col);
          }
          changed = true;
          break;
        }
      }
      if (row.empty()) continue;
      // Pivot on the largest column.
      long pc = row.rbegin()->first;
      Rat inv = 1 / row.rbegin()->second;
      for (auto& [col, val] : row) val *= inv;
      long new_idx = static_cast<long>(pivot_rows.size());
      // Eliminate pc from existing pivot rows. Stale entries in col_uses are
      // harmless (rows are re-checked); copy the list before mutating.
      std::vector<long> users;
      if (auto uses_it = col_uses.find(pc); uses_it != col_uses.end()) {
        users = uses_it->second;
        col_uses.erase(uses_it);
      }
      std::vector<std::pair<long, long>> new_uses;
      for (long ri : users) {
        auto& prow = pivot_rows[static_cast<size_t>(ri)];
        auto found = prow.find(pc);
        if (found == prow.end()) continue;
        Rat factor = found->second;
        for (const auto& [col, val] : row) {
          auto& entry = prow[col];
          entry -= factor * val;
          if (entry == 0) prow.erase(col);
          else if (col != pc) new_uses.emplace_back(col, ri);
        }
      }
      for (const auto& [col, ri] : new_uses) col_uses[col].push_back(ri);
      for (const auto& [col, val] : row) {
        (void)val;
        if (col != pc) col_uses[col].push_back(new_idx);
      }
      pivot_rows.push_back(std::move(row));
      pivot_of_col[pc] = new_idx;
    }

    // Free kept-variables form the basis.
    std::vector<long> free_vars;
    for (long k = 0; k < nk; ++k)
      if (pivot_of_col.find(k) == pivot_of_col.end()) free_vars.push_back(k);
    dim_ = static_cast<long>(free_vars.size());
    std::vector<long> basis_of_kept(static_cast<size_t>(nk), -1);
    for (long b = 0; b < dim_; ++b) basis_of_kept[static_cast<size_t>(free_vars[static_cast<size_t>(b)])] = b;

    // Expression of every kept variable over the basis.
    std::vector<SparseRow> kept_expr(static_cast<size_t>(nk));
    for (long k = 0; k < nk; ++k) {
      auto p = pivot_of_col.find(k);
      if (p == pivot_of_col.end()) {
        kept_expr[static_cast<size_t>(k)] = {{basis_of_kept[static_cast<size_t>(k)], Rat(1)}};
      } else {
        const auto& prow = pivot_rows[static_cast<size_t>(p->second)];
        SparseRow expr;
        for (const auto& [col, val] : prow) {
          if (col == k) continue;
          long b = basis_of_kept[static_cast<size_t>(col)];
          require(b >= 0, "pivot row references non-free column");
          expr.emplace_back(b, -val);
        }
        std::sort(expr.begin(), expr.end());
        kept_expr[static_cast<size_t>(k)] = std::move(expr);
      }
    }

    gen_rows_.resize(static_cast<size_t>(ngens));
    for (long i = 0; i < ngens; ++i) {
      long rep = pair_to[static_cast<size_t>(i)];
      int sgn = pair_sign[static_cast<size_t>(i)];
      if (sgn == 0) continue;
      long pos = kept_pos[static_cast<size_t>(rep)];
      SparseRow r = kept_expr[static_cast<size_t>(pos)];
      if (sgn < 0)
        for (auto& [col, val] : r) val = -val;
      gen_rows_[static_cast<size_t>(i)] = std::move(r);
    }

    basis_gen_.resize(static_cast<size_t>(dim_));
    for (long b = 0; b < dim_; ++b) basis_gen_[static_cast<size_t>(b)] = kept[static_cast<size_t>(free_vars[static_cast<size_t>(b)])];
  }

  void build_boundary() {
    // Seed the cusp class list from every generator so all classes appear,
    // then record the boundary of each basis symbol.
    std::vector<std::pair<Int, Int>> reps;
    for (long i = 0; i < p1_.size(); ++i) {
      auto g = p1_.lift_to_sl2(i);
      cusp_class(Int(g[0]), Int(g[2]), reps);
      cusp_class(Int(g[1]), Int(g[3]), reps);
    }
    require(static_cast<long>(reps.size()) == gamma0_ncusps(n_), "cusp class count mismatch");
    QMatrix b(dim_, static_cast<long>(reps.size()));
    for (long i = 0; i < dim_; ++i) {
      auto g = p1_.lift_to_sl2(basis_gen_[static_cast<size_t>(i)]);
      long c_inf = cusp_class(Int(g[0]), Int(g[2]), reps);
      long c_zero = cusp_class(Int(g[1]), Int(g[3]), reps);
      b.at(i, c_inf) += 1;
      b.at(i, c_zero) -= 1;
    }
    boundary_ = std::move(b);
    cusp_reps_ = std::move(reps);
  }

  // Class index of the cusp a/c, adding a new class when unseen.
  long cusp_class(Int a, Int c, std::vector<std::pair<Int, Int>>& reps) const {
    // normalize to lowest terms with c >= 0
    if (c == 0) {
      a = 1;
    } else {
      Int g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      a /= g;
      c /= g;
      if (c < 0) {
        a = -a;
        c = -c;
      }
    }
    for (size_t k = 0; k < reps.size(); ++k)
      if (cusps_equivalent(reps[k].first, reps[k].second, a, c)) return static_cast<long>(k);
    reps.emplace_back(a, c);
    return static_cast<long>(reps.size()) - 1;
  }

  bool cusps_equivalent(const Int& p1v, const Int& q1, const Int& p2, const Int& q2) const {
    // s_i p_i == 1 (mod q_i); equivalent iff s1 q2 == s2 q1 (mod gcd(q1 q2, N)).
    Int n(n_);
    Int g;
    Int q1q2 = q1 * q2;
    mpz_gcd(g.get_mpz_t(), q1q2.get_mpz_t(), n.get_mpz_t());
    auto inv_mod = [](const Int& p, const Int& q) -> Int {
      if (q == 0) return Int(1);
      if (q == 1 || q == -1) return Int(0);
      Int s;
      Int pm = p % q;
      if (pm < 0) pm += abs(q);
      require(mpz_invert(s.get_mpz_t(), pm.get_mpz_t(), q.get_mpz_t()) != 0,
              "cusp: non-invertible numerator");
      return s;
    };
    Int s1 = inv_mod(p1v, q1);
    Int s2 = inv_mod(p2, q2);
    Int diff = s1 * q2 - s2 * q1;
    if (g == 0) return diff == 0;
    return mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t()) != 0;
  }

  long n_;
  P1 p1_;
  long dim_ = 0;
  std::vector<long> basis_gen_;        // P1 index of each basis symbol
  std::vector<SparseRow> gen_rows_;    // reduction of every generator
  QMatrix boundary_;
  std::vector<std::pair<Int, Int>> cusp_reps_;
  Subspace cuspidal_;
  Subspace cuspidal_plus_;
};

}  // namespace splitcartan

#endif
