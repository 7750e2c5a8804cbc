#pragma once

/**
 * Brute-force ground truth for numerical semigroups given by an explicit
 * finite generator list, at machine width ("desk scale"). Everything in
 * here is deliberately independent of the closed-form layer: Apery sets
 * come from shortest-path relaxation on the residue graph, membership from
 * the Apery table, genus is double-counted (formula vs. literal gap scan),
 * and pseudo-Frobenius runs the quantified minimal-representative
 * criterion. The formula modules are *tested against* this file, never
 * implemented with it (the one deliberate exception: analyze() borrows
 * oracle_pf for d = 2 pseudo-Frobenius sets, which have no closed form).
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibsgp/bigint.hpp"
#include "fibsgp/errors.hpp"

namespace fibsgp {

// Largest modulus the relaxation will accept by default. Overridable per
// call and, at the CLI, via --oracle-cap / FIBSGP_ORACLE_CAP.
inline constexpr std::uint64_t kDefaultOracleCap = 1'000'000;

// Nonempty, sorted, distinct, positive, gcd 1 (so the complement of the
// generated semigroup is finite and Frobenius/genus are defined).
struct GeneratorSet {
  std::vector<std::uint64_t> gens;

  static GeneratorSet from_values(std::vector<std::uint64_t> values) {
    if (values.empty()) {
      throw std::invalid_argument("GeneratorSet: empty generator list");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.front() == 0) {
      throw std::invalid_argument("GeneratorSet: generators must be positive");
    }
    std::uint64_t g = 0;
    for (std::uint64_t v : values) g = std::gcd(g, v);
    if (g != 1) {
      throw std::invalid_argument(
          "GeneratorSet: gcd of generators is " + std::to_string(g) +
          ", not 1 (complement would be infinite)");
    }
    return GeneratorSet{std::move(values)};
  }

  static GeneratorSet from_bigints(const std::vector<BigInt>& values) {
    std::vector<std::uint64_t> v;
    v.reserve(values.size());
    for (const BigInt& x : values) v.push_back(to_uint64(x, "GeneratorSet"));
    return from_values(std::move(v));
  }

  std::uint64_t smallest() const { return gens.front(); }
};

// table[r] = minimal semigroup element congruent to r (mod modulus);
// table[0] = 0. Max over the table minus the modulus is the Frobenius
// number, and x is a member iff x >= table[x mod modulus].
struct OracleApery {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> table;
};

namespace detail {

// Guards the relaxation against 64-bit overflow: every tentative value is
// bounded by modulus * max_gen (a path uses < modulus edges of one weight
// before revisiting a residue).
inline void check_relaxation_width(std::uint64_t modulus, std::uint64_t max_gen,
                                   const char* who) {
  const std::uint64_t kLimit = std::uint64_t{1} << 62;
  if (max_gen != 0 && modulus > kLimit / max_gen) {
    throw CapExceededError(std::string(who) +
                           ": modulus * max generator would overflow");
  }
}

}  // namespace detail

// Apery set of <gens> with respect to a (a must be a member; typically the
// smallest generator). Computed as single-source shortest paths on the
// residue graph: nodes are residues mod a, each generator g contributes
// edges r -> (r+g) mod a of weight g, and the minimal element in class r is
// the distance from node 0. Any relaxation-to-fixpoint schedule yields the
// same unique table; this implementation settles nodes in ascending
// tentative-distance order (Dijkstra with a binary heap).
inline OracleApery oracle_apery(const GeneratorSet& gs, std::uint64_t a,
                                std::uint64_t cap = kDefaultOracleCap) {
  if (a == 0) {
    throw std::invalid_argument("oracle_apery: modulus must be positive");
  }
  if (a > cap) {
    throw CapExceededError("oracle_apery: modulus " + std::to_string(a) +
                           " exceeds cap " + std::to_string(cap));
  }
  detail::check_relaxation_width(a, gs.gens.back(), "oracle_apery");

  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> dist(a, kInf);
  dist[0] = 0;
  using Node = std::pair<std::uint64_t, std::uint64_t>;  // (dist, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [dv, r] = heap.top();
    heap.pop();
    if (dv != dist[r]) continue;  // stale entry
    for (std::uint64_t g : gs.gens) {
      std::uint64_t nr = (r + g % a) % a;
      std::uint64_t nd = dv + g;
      if (nd < dist[nr]) {
        dist[nr] = nd;
        heap.emplace(nd, nr);
      }
    }
  }
  for (std::uint64_t r = 0; r < a; ++r) {
    if (dist[r] == kInf) {
      // Unreachable residue: a shares a factor with every pathway, which
      // from_values() should have excluded. Means a is not in <gens>.
      throw std::invalid_argument(
          "oracle_apery: residue class " + std::to_string(r) +
          " unreachable; is a = " + std::to_string(a) + " a member?");
    }
  }

  // The table is the Apery set of <gens union {a}>; demand a itself be
  // representable so it is the Apery set of <gens>.
  if (std::find(gs.gens.begin(), gs.gens.end(), a) == gs.gens.end()) {
    std::uint64_t r = a % gs.smallest();
    OracleApery base = oracle_apery(gs, gs.smallest(), cap);
    if (a < base.table[r]) {
      throw std::invalid_argument("oracle_apery: a = " + std::to_string(a) +
                                  " is not a member of the semigroup");
    }
  }
  return OracleApery{a, std::move(dist)};
}

inline bool apery_member(const OracleApery& ap, std::uint64_t x) {
  return x >= ap.table[x % ap.modulus];
}

inline bool oracle_membership(const GeneratorSet& gs, std::uint64_t x,
                              std::uint64_t cap = kDefaultOracleCap) {
  if (x == 0) return true;
  return apery_member(oracle_apery(gs, gs.smallest(), cap), x);
}

// max(table) - a; equals -1 exactly when the semigroup is all of N_0.
inline std::int64_t oracle_frobenius(const GeneratorSet& gs,
                                     std::uint64_t cap = kDefaultOracleCap) {
  OracleApery ap = oracle_apery(gs, gs.smallest(), cap);
  std::uint64_t top = *std::max_element(ap.table.begin(), ap.table.end());
  return static_cast<std::int64_t>(top) - static_cast<std::int64_t>(ap.modulus);
}

// Number of gaps, computed twice on purpose: once from the Apery table
// (sum(table)/a - (a-1)/2) and once by literally scanning x = 1..Frobenius
// and counting non-members. Disagreement is an implementation bug, not a
// data condition, hence logic_error.
inline std::uint64_t oracle_genus(const GeneratorSet& gs,
                                  std::uint64_t cap = kDefaultOracleCap) {
  OracleApery ap = oracle_apery(gs, gs.smallest(), cap);
  const std::uint64_t a = ap.modulus;

  unsigned __int128 sum = 0;
  std::uint64_t top = 0;
  for (std::uint64_t v : ap.table) {
    sum += v;
    top = std::max(top, v);
  }
  unsigned __int128 doubled = 2 * sum - static_cast<unsigned __int128>(a) * (a - 1);
  if (doubled % (2 * static_cast<unsigned __int128>(a)) != 0) {
    throw std::logic_error("oracle_genus: Apery sum formula not divisible");
  }
  std::uint64_t by_formula =
      static_cast<std::uint64_t>(doubled / (2 * static_cast<unsigned __int128>(a)));

  std::uint64_t by_scan = 0;
  for (std::uint64_t x = 1; top >= a && x <= top - a; ++x) {
    if (!apery_member(ap, x)) ++by_scan;
  }
  if (by_scan != by_formula) {
    throw std::logic_error("oracle_genus: gap scan " + std::to_string(by_scan) +
                           " disagrees with Apery formula " +
                           std::to_string(by_formula));
  }
  return by_formula;
}

// The gaps themselves, materialized; meant for small examples only.
struct GapSet {
  std::vector<std::uint64_t> gaps;  // ascending
};

inline GapSet oracle_gaps(const GeneratorSet& gs,
                          std::uint64_t cap = kDefaultOracleCap) {
  OracleApery ap = oracle_apery(gs, gs.smallest(), cap);
  std::uint64_t top = *std::max_element(ap.table.begin(), ap.table.end());
  if (top < ap.modulus) return GapSet{};  // no gaps: semigroup is all of N_0
  if (top - ap.modulus > (std::uint64_t{1} << 31)) {
    throw CapExceededError("oracle_gaps: gap list would exceed 2^31 entries");
  }
  GapSet out;
  for (std::uint64_t x = 1; x <= top - ap.modulus; ++x) {
    if (!apery_member(ap, x)) out.gaps.push_back(x);
  }
  return out;
}

// Pseudo-Frobenius numbers via the minimal-representative criterion:
// w - a is pseudo-Frobenius iff w is in the Apery table and
// w + table[x] > table[(w + x) mod a] for every x = 1..a-1 (left side is
// always >=, so the criterion is really "never equal"). A cheap maximality
// pre-filter shrinks the candidate list first: if w + g stays in the table
// for some generator g, then w extends inside the Apery set and cannot
// qualify; conversely if w + g leaves the table for every g, no sum chain
// w + s can land in it again. The quantified criterion is still run as the
// final arbiter on every surviving candidate.
inline std::vector<std::int64_t> oracle_pf(const GeneratorSet& gs,
                                           std::uint64_t cap = kDefaultOracleCap) {
  OracleApery ap = oracle_apery(gs, gs.smallest(), cap);
  const std::uint64_t a = ap.modulus;

  std::vector<std::uint64_t> candidates;
  for (std::uint64_t w : ap.table) {
    bool maximal = true;
    for (std::uint64_t g : gs.gens) {
      std::uint64_t v = w + g;
      if (v == ap.table[v % a]) {
        maximal = false;
        break;
      }
    }
    if (maximal) candidates.push_back(w);
  }

  std::vector<std::int64_t> pf;
  for (std::uint64_t w : candidates) {
    bool ok = true;
    for (std::uint64_t x = 1; x < a; ++x) {
      if (w + ap.table[x] == ap.table[(x + w) % a]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      pf.push_back(static_cast<std::int64_t>(w) - static_cast<std::int64_t>(a));
    }
  }
  if (pf.size() != candidates.size()) {
    // The pre-filter admitted a non-maximal element; that would mean the
    // closure argument above is wrong somewhere.
    throw std::logic_error("oracle_pf: maximality filter and criterion disagree");
  }
  std::sort(pf.begin(), pf.end());
  return pf;
}

namespace detail {

// Membership of x in the semigroup generated by `values`, which may have
// gcd > 1 (scale down) or be empty (only 0 is a member).
inline bool member_general(std::vector<std::uint64_t> values, std::uint64_t x,
                           std::uint64_t cap) {
  if (x == 0) return true;
  if (values.empty()) return false;
  std::uint64_t g = 0;
  for (std::uint64_t v : values) g = std::gcd(g, v);
  if (x % g != 0) return false;
  for (std::uint64_t& v : values) v /= g;
  return oracle_membership(GeneratorSet::from_values(std::move(values)), x / g,
                           cap);
}

}  // namespace detail

// Unique minimal generating set: drop every generator representable by the
// others. Removals never change the semigroup, so testing each generator
// against the current working set (minus itself) is sound.
inline std::vector<std::uint64_t> oracle_minimal_generators(
    const GeneratorSet& gs, std::uint64_t cap = kDefaultOracleCap) {
  std::vector<std::uint64_t> work = gs.gens;
  for (std::size_t i = 0; i < work.size();) {
    std::vector<std::uint64_t> rest;
    rest.reserve(work.size() - 1);
    for (std::size_t j = 0; j < work.size(); ++j) {
      if (j != i) rest.push_back(work[j]);
    }
    if (detail::member_general(std::move(rest), work[i], cap)) {
      work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return work;
}

}  // namespace fibsgp
