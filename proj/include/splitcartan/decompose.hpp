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

#ifndef SPLITCARTAN_DECOMPOSE_HPP
#define SPLITCARTAN_DECOMPOSE_HPP

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "splitcartan/factor.hpp"
#include "splitcartan/modsym.hpp"

namespace splitcartan {

struct SeparationError : std::runtime_error {
  explicit SeparationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caches ambient Hecke matrices of a frozen space.
class HeckeProvider {
 public:
  explicit HeckeProvider(const ModularSymbolSpace& space) : space_(space) {}

  const QMatrix& T(long ell) {
    auto it = cache_.find(ell);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(ell, space_.hecke_matrix(ell)).first->second;
  }

  const ModularSymbolSpace& space() const { return space_; }

 private:
  const ModularSymbolSpace& space_;
  std::map<long, QMatrix> cache_;
};

namespace detail_dec {

// Primary decomposition of V under the restriction M of one operator.
// Returns proper components, or empty when the charpoly is a power of a
// single irreducible (no split available from this operator).
inline std::vector<Subspace> split_by_operator(const Subspace& v, const QMatrix& m,
                                               bool& certified_irreducible) {
  RatPoly cp = charpoly(m);
  IntPoly cpz = cp.primitive_int();
  auto fac = factor_over_rationals(cpz);
  certified_irreducible = (fac.factors.size() == 1 && fac.factors[0].second == 1);
  if (certified_irreducible || fac.factors.size() == 1) return {};
  std::vector<Subspace> parts;
  for (const auto& [g, mult] : fac.factors) {
    // Kernel of g(M)^mult inside V's coordinates.
    QMatrix gm = eval_at_matrix(RatPoly(g), m);
    QMatrix power = gm;
    for (int i = 1; i < mult; ++i) power = power * gm;
    QMatrix coeff = power.left_kernel();
    require(coeff.rows() == g.degree() * mult, "split: primary component dimension mismatch");
    parts.push_back(v.compose(coeff));
  }
  return parts;
}

}  // namespace detail_dec

// Decompose a Hecke-stable subspace into rational Hecke-irreducible
// summands (one per Galois orbit of eigenforms). Operators are taken from
// the prime budget (skipping primes dividing the level), then small
// two-operator combinations. Throws SeparationError when the budget is
// exhausted before every summand is certified irreducible.
inline std::vector<Subspace> eigen_decompose(const Subspace& start, HeckeProvider& heckes,
                                             long prime_budget = 100) {
  long level = heckes.space().level();
  std::vector<long> ops;
  for (long ell : primes_up_to(prime_budget))
    if (level % ell != 0) ops.push_back(ell);
  require(!ops.empty(), "eigen_decompose: empty operator budget");

  struct Task {
    Subspace v;
    size_t next_op;
  };
  std::vector<Subspace> done;
  std::deque<Task> work;
  if (start.dim() > 0) work.push_back({start, 0});

  // Single-prime passes, then combinations T_a + k T_b.
  auto op_matrix = [&](const Subspace& v, size_t op_index) -> QMatrix {
    size_t n_single = ops.size();
    if (op_index < n_single) return v.restrict_operator(heckes.T(ops[op_index]));
    // combos in deterministic order
    size_t combo = op_index - n_single;
    size_t n_pairs = n_single * (n_single - 1) / 2;
    size_t k = combo / n_pairs + 1;
    size_t pair_idx = combo % n_pairs;
    size_t a = 0, b = 1;
    for (size_t step = pair_idx; ; ) {
      size_t row_len = n_single - 1 - a;
      if (step < row_len) {
        b = a + 1 + step;
        break;
      }
      step -= row_len;
      ++a;
    }
    QMatrix ma = v.restrict_operator(heckes.T(ops[a]));
    QMatrix mb = v.restrict_operator(heckes.T(ops[b]));
    return ma + mb * Rat(static_cast<long>(k));
  };
  size_t max_ops = ops.size() + 3 * (ops.size() * (ops.size() - 1) / 2);

  while (!work.empty()) {
    Task task = std::move(work.front());
    work.pop_front();
    if (task.v.dim() == 1) {
      done.push_back(std::move(task.v));
      continue;
    }
    bool resolved = false;
    for (size_t op = task.next_op; op < max_ops; ++op) {
      QMatrix m = op_matrix(task.v, op);
      bool irred = false;
      auto parts = detail_dec::split_by_operator(task.v, m, irred);
      if (irred) {
        done.push_back(std::move(task.v));
        resolved = true;
        break;
      }
      if (!parts.empty()) {
        for (auto& part : parts) work.push_back({std::move(part), op});
        resolved = true;
        break;
      }
    }
    if (!resolved)
      throw SeparationError("eigen_decompose: operator budget exhausted at level " +
                            std::to_string(level) + ", subspace dim " +
                            std::to_string(task.v.dim()) +
                            "; increase the prime budget");
  }

  // Canonical order: by dimension, then by pivot columns.
  std::sort(done.begin(), done.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.pivots < b.pivots;
  });
  return done;
}

// New subspace of the cuspidal-plus part: intersection of the kernels of
// both degeneracy maps to each proper prime-divisor level.
inline Subspace new_cuspidal_plus(const ModularSymbolSpace& space,
                                  const std::vector<const ModularSymbolSpace*>& lower) {
  const Subspace& plus = space.cuspidal_plus();
  long n = space.level();
  std::vector<QMatrix> maps;
  long total_cols = 0;
  for (const auto* target : lower) {
    require(target && n % target->level() == 0 && target->level() < n,
            "new_cuspidal_plus: bad lower space");
    long q = n / target->level();
    require(is_prime(q), "new_cuspidal_plus: expected target level N/q, q prime");
    maps.push_back(space.degeneracy_matrix(*target, 1));
    maps.push_back(space.degeneracy_matrix(*target, q));
    total_cols += 2 * target->dim();
  }
  if (total_cols == 0) return plus;
  QMatrix stacked(space.dim(), total_cols);
  long off = 0;
  for (const auto& m : maps) {
    for (long i = 0; i < space.dim(); ++i)
      for (long j = 0; j < m.cols(); ++j) stacked.at(i, off + j) = m.at(i, j);
    off += m.cols();
  }
  QMatrix on_plus = plus.rows * stacked;
  return plus.compose(on_plus.left_kernel());
}

}  // namespace splitcartan

#endif
