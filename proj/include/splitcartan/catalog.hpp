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

#ifndef SPLITCARTAN_CATALOG_HPP
#define SPLITCARTAN_CATALOG_HPP

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "splitcartan/decompose.hpp"
#include "splitcartan/genus.hpp"
#include "splitcartan/modsym.hpp"

namespace splitcartan {

// The quadratic Dirichlet character of conductor p (the Legendre symbol),
// attached to K = Q(sqrt(p*)), p* = (-1)^((p-1)/2) p.
struct QuadraticCharacter {
  long p;
  int chi(long n) const { return legendre(mod_long(n, p), p); }
  long p_star() const { return (p % 4 == 1) ? p : -p; }
};

// One Galois orbit of newforms: level, dimension (= degree of the Hecke
// field), Fricke sign, characteristic polynomials of T_ell on the orbit
// subspace, and the CM / inner-twist flags.
struct NewformOrbit {
  std::string id;                  // "<level>.<letter>", canonical
  long level = 0;                  // p or p^2
  long dim = 0;
  int epsilon = 0;                 // Fricke eigenvalue at its own level
  std::map<long, IntPoly> charpolys;  // prime ell (!= p) -> charpoly, degree = dim
  bool cm = false;
  bool inner_twist = false;

  bool in_plus_union(long p) const {
    return level == p || epsilon == +1;
  }
  const IntPoly& charpoly_at(long ell) const {
    auto it = charpolys.find(ell);
    require(it != charpolys.end(),
            "orbit " + id + ": no charpoly stored for ell = " + std::to_string(ell));
    return it->second;
  }
  IntPoly twisted_charpoly_at(long ell, const QuadraticCharacter& chi) const {
    const IntPoly& c = charpoly_at(ell);
    return chi.chi(ell) == -1 ? c.sign_twist() : c;
  }
};

enum class SplittingField { Rationals, K, HilbertClassField };

inline const char* splitting_field_name(SplittingField f) {
  switch (f) {
    case SplittingField::Rationals: return "Q";
    case SplittingField::K: return "K";
    case SplittingField::HilbertClassField: return "Hilbert class field of K";
  }
  return "?";
}

struct Catalog {
  long p = 0;
  long lmax = 0;          // charpolys stored for all primes <= lmax, != p
  bool sound = false;     // lmax reaches the Sturm bound of level p^2
  std::string provenance; // "computed" or "imported:<source>"
  std::vector<NewformOrbit> orbits;   // canonical order

  // Derived, deterministic:
  std::vector<long> twist_to;         // orbit index -> index of f (x) chi
  std::vector<long> s_members;        // indices of the set S
  long t = 0;                         // sum of dims over S
  SplittingField splitting = SplittingField::Rationals;
  std::vector<std::string> notes;     // surfaced discrepancies

  long match_bound() const { return std::min(lmax, sturm_bound(p * p)); }

  long plus_dimension_total() const {
    long s = 0;
    for (const auto& o : orbits)
      if (o.in_plus_union(p)) s += o.dim;
    return s;
  }
  long orbit_count(long level) const {
    long c = 0;
    for (const auto& o : orbits)
      if (o.level == level) ++c;
    return c;
  }
  const NewformOrbit& orbit_by_id(const std::string& id) const {
    for (const auto& o : orbits)
      if (o.id == id) return o;
    throw std::invalid_argument("catalog: unknown orbit id " + id);
  }
};

// Dimension of the CM abelian variety factor for p = 3 (mod 4): the class
// number of Q(sqrt(-p)) via the quadratic-residue count
//   g_c = (2V - (p-1)/2) / (2 - chi(2)),
// V = #{quadratic residues mod p in [1, (p-1)/2]}. The denominator is 3
// exactly when p = 3 (mod 8) (2 inert) and 1 when p = 7 (mod 8) (2 split).
inline long cm_dimension(long p) {
  if (p % 4 != 3) throw std::invalid_argument("cm_dimension: requires p = 3 (mod 4)");
  require(is_prime(p) && p >= 7, "cm_dimension: prime p >= 7 expected");
  long v = 0;
  for (long a = 1; a <= (p - 1) / 2; ++a)
    if (legendre(a, p) == 1) ++v;
  long num = 2 * v - (p - 1) / 2;
  long den = 2 - legendre(2, p);
  require(num > 0 && num % den == 0, "cm_dimension: formula did not divide evenly");
  return num / den;
}

// CM test: level p^2, p = 3 (mod 4), and a_ell = 0 (charpoly x^dim) for every
// prime ell <= bound inert under chi. Refuses (throws) when the stored
// charpolys do not cover the requested bound.
inline bool detect_cm(const NewformOrbit& orbit, const QuadraticCharacter& chi, long bound) {
  if (orbit.level != chi.p * chi.p || chi.p % 4 != 3) return false;
  IntPoly xdim = IntPoly::x_power(orbit.dim);
  for (long ell : primes_up_to(bound)) {
    if (ell == chi.p) continue;
    const IntPoly& c = orbit.charpoly_at(ell);  // throws when range insufficient
    if (chi.chi(ell) == -1 && c != xdim) return false;
  }
  return true;
}

// Inner twist test for a non-CM orbit: every stored charpoly is invariant
// under a_ell -> chi(ell) a_ell up to the bound.
inline bool detect_inner_twist(const NewformOrbit& orbit, const QuadraticCharacter& chi,
                               long bound) {
  if (orbit.cm) throw std::invalid_argument("detect_inner_twist: CM orbit excluded (self-twist)");
  for (long ell : primes_up_to(bound)) {
    if (ell == chi.p) continue;
    const IntPoly& c = orbit.charpoly_at(ell);
    if (chi.chi(ell) == -1 && c != c.sign_twist()) return false;
  }
  return true;
}

// Index of the unique orbit whose eigenvalue system matches f (x) chi,
// compared through charpoly fingerprints at all primes ell <= bound, != p.
inline long twist_image(const Catalog& cat, long orbit_index, const QuadraticCharacter& chi) {
  const NewformOrbit& src = cat.orbits[static_cast<size_t>(orbit_index)];
  long bound = cat.match_bound();
  std::vector<long> matches;
  for (size_t j = 0; j < cat.orbits.size(); ++j) {
    const NewformOrbit& cand = cat.orbits[j];
    if (cand.dim != src.dim) continue;
    bool ok = true;
    for (long ell : primes_up_to(bound)) {
      if (ell == chi.p) continue;
      if (cand.charpoly_at(ell) != src.twisted_charpoly_at(ell, chi)) {
        ok = false;
        break;
      }
    }
    if (ok) matches.push_back(static_cast<long>(j));
  }
  if (matches.size() != 1)
    throw std::runtime_error("twist_image: orbit " + src.id + " has " +
                             std::to_string(matches.size()) +
                             " matches at bound " + std::to_string(bound) +
                             "; extend the ell range");
  return matches[0];
}

namespace detail_cat {

inline std::string orbit_letter(long k) {
  std::string s;
  ++k;
  while (k > 0) {
    long r = (k - 1) % 26;
    s.insert(s.begin(), static_cast<char>('a' + r));
    k = (k - 1) / 26;
  }
  return s;
}

inline void run_parallel(long n_tasks, long jobs, const std::function<void(long)>& fn) {
  if (jobs <= 1 || n_tasks <= 1) {
    for (long i = 0; i < n_tasks; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  auto worker = [&] {
    while (true) {
      long i = next.fetch_add(1);
      if (i >= n_tasks) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  long n_threads = std::min<long>(jobs, n_tasks);
  pool.reserve(static_cast<size_t>(n_threads));
  for (long t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace detail_cat

// Populate the derived fields (twist table, S, t, splitting field) from the
// orbit data. Deterministic; callable on computed and imported catalogs.
inline void finalize_catalog(Catalog& cat) {
  QuadraticCharacter chi{cat.p};
  size_t n = cat.orbits.size();
  cat.twist_to.assign(n, -1);
  for (size_t i = 0; i < n; ++i) cat.twist_to[i] = twist_image(cat, static_cast<long>(i), chi);

  // Twist is an involution on the orbit set. An orbit is fixed exactly when
  // the twist of an eigenform stays inside the orbit: either f = f (x) chi
  // (CM, the unique case for p = 3 mod 4) or f (x) chi is a proper Galois
  // conjugate (inner twist). Inner-twist fixed orbits are surfaced.
  long cm_fixed = 0;
  for (size_t i = 0; i < n; ++i) {
    require(cat.twist_to[static_cast<size_t>(cat.twist_to[i])] == static_cast<long>(i),
            "twist table is not an involution");
    bool is_fixed = cat.twist_to[i] == static_cast<long>(i);
    const NewformOrbit& o = cat.orbits[i];
    require(is_fixed == (o.cm || o.inner_twist),
            "twist fixed points must be exactly the CM and inner-twist orbits");
    if (is_fixed && o.cm) ++cm_fixed;
    if (is_fixed && !o.cm)
      cat.notes.push_back("orbit " + o.id +
                          " is twist-fixed via an inner twist (not CM); its members are "
                          "permuted by the quadratic twist");
  }
  require(cm_fixed == ((cat.p % 4 == 3) ? 1 : 0),
          "self-twist (CM) orbit count must be 1 iff p = 3 (mod 4)");

  // S: non-CM orbits of the plus part whose twist leaves the plus part,
  // together with the CM orbit when p = 3 (mod 8).
  cat.s_members.clear();
  cat.t = 0;
  for (size_t i = 0; i < n; ++i) {
    const NewformOrbit& o = cat.orbits[i];
    if (!o.in_plus_union(cat.p)) continue;
    bool member;
    if (o.cm) {
      member = (cat.p % 8 == 3);
    } else {
      const NewformOrbit& img = cat.orbits[static_cast<size_t>(cat.twist_to[i])];
      member = !img.in_plus_union(cat.p);
    }
    if (member) {
      cat.s_members.push_back(static_cast<long>(i));
      cat.t += o.dim;
    }
  }

  // Splitting field of J_0^+(p^2).
  if (cat.p % 8 == 3) {
    cat.splitting = SplittingField::HilbertClassField;
  } else {
    bool has_internal_twist_pair = false;
    for (size_t i = 0; i < n; ++i) {
      const NewformOrbit& o = cat.orbits[i];
      if (!o.in_plus_union(cat.p)) continue;
      const NewformOrbit& img = cat.orbits[static_cast<size_t>(cat.twist_to[i])];
      if (img.in_plus_union(cat.p)) has_internal_twist_pair = true;
    }
    cat.splitting = has_internal_twist_pair ? SplittingField::K : SplittingField::Rationals;
  }
}

// A computed catalog keeps the live symbol spaces and orbit subspaces so
// q-expansions can be derived from the same decomposition.
struct ComputedCatalog {
  Catalog meta;
  std::shared_ptr<const ModularSymbolSpace> space_p;
  std::shared_ptr<const ModularSymbolSpace> space_p2;
  std::vector<Subspace> orbit_spaces;  // parallel to meta.orbits
};

// Build the newform catalog for levels p and p^2: decompose the new parts
// of the cuspidal-plus spaces into Galois orbits, attach Fricke signs and
// Hecke charpolys for all primes ell <= lmax (ell != p), then flag CM and
// inner twists and assemble the twist table and the set S.
inline ComputedCatalog build_catalog(long p, long lmax,
                                     std::shared_ptr<const ModularSymbolSpace> sp,
                                     std::shared_ptr<const ModularSymbolSpace> sp2,
                                     long jobs = 1, long decompose_budget = 100) {
  require(is_prime(p) && p >= 11, "build_catalog: prime p >= 11 required");
  require(sp && sp->level() == p && sp2 && sp2->level() == p * p, "build_catalog: bad spaces");
  long sturm = sturm_bound(p * p);

  ComputedCatalog out;
  out.space_p = sp;
  out.space_p2 = sp2;
  Catalog& cat = out.meta;
  cat.p = p;
  cat.lmax = lmax;
  cat.sound = lmax >= sturm;
  cat.provenance = "computed";

  // New subspaces (level p is prime: new = full cuspidal-plus).
  HeckeProvider heckes_p(*sp);
  HeckeProvider heckes_p2(*sp2);
  Subspace new_p = sp->cuspidal_plus();
  Subspace new_p2 = new_cuspidal_plus(*sp2, {sp.get()});

  std::vector<std::pair<long, Subspace>> orbit_list;  // (level, space)
  for (auto& s : eigen_decompose(new_p, heckes_p, decompose_budget))
    orbit_list.emplace_back(p, std::move(s));
  for (auto& s : eigen_decompose(new_p2, heckes_p2, decompose_budget))
    orbit_list.emplace_back(p * p, std::move(s));

  // Fricke sign per orbit: the involution restricts to a scalar +-1.
  QMatrix w_p = sp->fricke_matrix();
  QMatrix w_p2 = sp2->fricke_matrix();
  std::vector<NewformOrbit> orbits(orbit_list.size());
  for (size_t i = 0; i < orbit_list.size(); ++i) {
    auto& [level, sub] = orbit_list[i];
    NewformOrbit& o = orbits[i];
    o.level = level;
    o.dim = sub.dim();
    QMatrix w = sub.restrict_operator(level == p ? w_p : w_p2);
    bool plus = (w == QMatrix::identity(sub.dim()));
    bool minus = (w == QMatrix::identity(sub.dim()) * Rat(-1));
    require(plus || minus, "Fricke involution is not scalar on an orbit");
    o.epsilon = plus ? +1 : -1;
  }

  // Hecke charpolys for all primes ell <= lmax, ell != p. Distinct ell are
  // independent; the ambient matrix is shared by every orbit at the level.
  std::vector<long> ells;
  for (long ell : primes_up_to(lmax))
    if (ell != p) ells.push_back(ell);
  std::vector<std::map<long, IntPoly>> per_orbit(orbit_list.size());
  {
    std::vector<std::vector<IntPoly>> results(ells.size(),
                                              std::vector<IntPoly>(orbit_list.size()));
    detail_cat::run_parallel(static_cast<long>(ells.size()), jobs, [&](long k) {
      long ell = ells[static_cast<size_t>(k)];
      QMatrix t_p = sp->hecke_matrix(ell);
      QMatrix t_p2 = sp2->hecke_matrix(ell);
      for (size_t i = 0; i < orbit_list.size(); ++i) {
        auto& [level, sub] = orbit_list[i];
        QMatrix m = sub.restrict_operator(level == p ? t_p : t_p2);
        RatPoly cp = charpoly(m);
        require(cp.is_integral(), "orbit charpoly not integral");
        results[static_cast<size_t>(k)][i] = cp.to_int_poly();
      }
    });
    for (size_t k = 0; k < ells.size(); ++k)
      for (size_t i = 0; i < orbit_list.size(); ++i)
        per_orbit[i][ells[k]] = std::move(results[k][i]);
  }
  for (size_t i = 0; i < orbit_list.size(); ++i) orbits[i].charpolys = std::move(per_orbit[i]);

  // Canonical order and ids: by level, dimension, Fricke sign, then the
  // charpoly fingerprints at small primes.
  std::vector<size_t> order(orbits.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto fingerprint_less = [&](size_t a, size_t b) {
    const NewformOrbit& x = orbits[a];
    const NewformOrbit& y = orbits[b];
    if (x.level != y.level) return x.level < y.level;
    if (x.dim != y.dim) return x.dim < y.dim;
    if (x.epsilon != y.epsilon) return x.epsilon > y.epsilon;
    for (long ell : ells) {
      if (ell > 50) break;
      const IntPoly& cx = x.charpolys.at(ell);
      const IntPoly& cy = y.charpolys.at(ell);
      for (long d = std::max(cx.degree(), cy.degree()); d >= 0; --d) {
        if (cx.coeff(d) != cy.coeff(d)) return cx.coeff(d) < cy.coeff(d);
      }
    }
    return false;
  };
  std::sort(order.begin(), order.end(), fingerprint_less);
  cat.orbits.clear();
  out.orbit_spaces.clear();
  std::map<long, long> per_level_count;
  for (size_t k = 0; k < order.size(); ++k) {
    NewformOrbit o = std::move(orbits[order[k]]);
    o.id = std::to_string(o.level) + "." + detail_cat::orbit_letter(per_level_count[o.level]++);
    cat.orbits.push_back(std::move(o));
    out.orbit_spaces.push_back(std::move(orbit_list[order[k]].second));
  }

  // Flags at the soundness bound (or the stored bound when exploring).
  QuadraticCharacter chi{p};
  long flag_bound = std::min(lmax, sturm);
  for (auto& o : cat.orbits) {
    o.cm = detect_cm(o, chi, flag_bound);
    o.inner_twist = o.cm ? false : detect_inner_twist(o, chi, flag_bound);
  }
  if (!cat.sound)
    cat.notes.push_back("lmax " + std::to_string(lmax) + " is below the Sturm bound " +
                        std::to_string(sturm) +
                        "; CM/inner-twist flags and twist matches are provisional");

  // Structural checks pinned by the decomposition of J_0^+(p^2).
  long g_plus = genus_table(p).g_plus;
  require(cat.plus_dimension_total() == g_plus,
          "catalog: plus-part dimension total != g+ for p = " + std::to_string(p));
  if (p % 4 == 3) {
    long cm_count = 0;
    for (const auto& o : cat.orbits)
      if (o.cm) {
        ++cm_count;
        require(o.dim == cm_dimension(p), "CM orbit dimension != class number");
        require((o.epsilon == +1) == (p % 8 == 3), "CM Fricke sign violates the mod-8 rule");
      }
    require(cm_count == 1, "expected exactly one CM orbit for p = 3 (mod 4)");
  }
  if (p == 11) {
    cat.notes.push_back(
        "computed |New_121| = " + std::to_string(cat.orbit_count(121)) +
        " Galois orbits (one per Fricke sign pattern); the w=+1 count is " +
        std::to_string([&] {
          long c = 0;
          for (const auto& o : cat.orbits)
            if (o.level == 121 && o.epsilon == 1) ++c;
          return c;
        }()) +
        "; a cited source states |New_121| = |New_11| = 1, which matches only the w=+1 count");
  }

  finalize_catalog(cat);
  return out;
}

// Splitting field classification, with the class-number data attached.
struct SplittingFieldReport {
  SplittingField field;
  long p_star;          // discriminant of K
  long class_number;    // of Q(sqrt(-p)), only for p = 3 (mod 4)
};

inline SplittingFieldReport splitting_field(const Catalog& cat) {
  SplittingFieldReport r{cat.splitting, QuadraticCharacter{cat.p}.p_star(), 0};
  if (cat.p % 4 == 3) r.class_number = cm_dimension(cat.p);
  return r;
}

}  // namespace splitcartan

#endif
