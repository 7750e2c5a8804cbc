#pragma once

/**
 * Closed-form invariants of the numerical semigroup generated by the
 * stepped subsequence V_n, V_{n+d}, V_{n+2d}, ... of a generalized
 * Fibonacci sequence with coprime positive seed:
 *
 *   - existence of the semigroup (finite complement) reduces to
 *     gcd(a, b) = 1 and gcd(V_n, F_d) = 1;
 *   - odd d collapses to the two-generator semigroup <V_n, V_{n+d}>
 *     with the classical two-generator formulas;
 *   - d = 2 is resolved through the greedy map s: the Apery set of V_n is
 *     { s(x) : 1 <= x <= V_n - 1 } plus 0, Frobenius is s(V_n - 1) - V_n,
 *     genus comes from prefix sums of s, and the embedding dimension is
 *     the block count kappa with F_{2(kappa-1)} <= V_n - 1 < F_{2kappa};
 *   - even d > 2 is not covered by the theory and is rejected.
 *
 * Genus divisions are performed on doubled numerators with divisibility
 * asserted, because the two summands are half-integers whenever V_n is
 * even; nothing in this file ever rounds.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fibsgp/bigint.hpp"
#include "fibsgp/errors.hpp"
#include "fibsgp/fib_seq.hpp"
#include "fibsgp/greedy.hpp"
#include "fibsgp/oracle.hpp"

namespace fibsgp {

// The subsequence V_n, V_{n+d}, V_{n+2d}, ... of the sequence seeded (a, b).
struct SubsequenceSpec {
  SeedPair seed;
  std::size_t n;
  std::size_t d;

  SubsequenceSpec(SeedPair seed_, std::size_t n_, std::size_t d_)
      : seed(std::move(seed_)), n(n_), d(d_) {
    if (n < 1 || d < 1) {
      throw std::invalid_argument("SubsequenceSpec: n and d must be >= 1");
    }
  }
};

// The subsequence generates a numerical semigroup (cofinite in N_0) iff
// both gcd conditions hold. For d in {1, 2}, F_d = 1 makes the second
// condition automatic.
inline bool existence(const SubsequenceSpec& spec) {
  if (big_gcd(spec.seed.a, spec.seed.b) != 1) return false;
  return big_gcd(gen_term(spec.seed, spec.n), fib(spec.d)) == 1;
}

// Everything analyze() knows about an existing semigroup. pseudo_frobenius
// is optional because for d = 2 it is only computed (via the oracle) when
// V_n is under the configured cap.
struct SemigroupProfile {
  std::vector<BigInt> minimal_generators;  // ascending
  std::size_t embedding_dimension = 0;
  BigInt frobenius;
  BigInt genus;
  std::optional<std::vector<BigInt>> pseudo_frobenius;
  bool degenerate = false;  // the semigroup is all of N_0
};

struct SemigroupSummary {
  SubsequenceSpec spec;
  // Empty exactly when the subsequence does not generate a numerical
  // semigroup; every result field lives inside.
  std::optional<SemigroupProfile> profile;

  bool exists() const { return profile.has_value(); }
};

namespace detail {

// 1 generates everything: F = -1 by convention, no gaps, and the
// pseudo-Frobenius criterion is vacuous at the single Apery element 0,
// yielding {-1} (matching the oracle on <1>).
inline SemigroupProfile degenerate_profile() {
  SemigroupProfile p;
  p.minimal_generators = {BigInt(1)};
  p.embedding_dimension = 1;
  p.frobenius = -1;
  p.genus = 0;
  p.pseudo_frobenius = std::vector<BigInt>{BigInt(-1)};
  p.degenerate = true;
  return p;
}

}  // namespace detail

// Odd d: the first two terms already generate the whole semigroup, so the
// two-generator formulas apply to p = V_n, q = V_{n+d}:
//   F = (p-1)(q-1) - 1,  genus = (p-1)(q-1)/2,  PF = {F},  e = 2.
// Degenerates to N_0 when either term is 1.
inline SemigroupSummary odd_d_summary(const SubsequenceSpec& spec) {
  if (spec.d % 2 == 0) {
    throw std::invalid_argument("odd_d_summary: d must be odd");
  }
  if (!existence(spec)) {
    throw std::invalid_argument(
        "odd_d_summary: subsequence does not generate a numerical semigroup");
  }
  BigInt p = gen_term(spec.seed, spec.n);
  BigInt q = gen_term(spec.seed, spec.n + spec.d);

  SemigroupSummary out{spec, std::nullopt};
  if (p == 1 || q == 1) {
    out.profile = detail::degenerate_profile();
    return out;
  }

  SemigroupProfile prof;
  prof.minimal_generators = {p, q};
  if (prof.minimal_generators[0] > prof.minimal_generators[1]) {
    std::swap(prof.minimal_generators[0], prof.minimal_generators[1]);
  }
  prof.embedding_dimension = 2;
  BigInt product = (p - 1) * (q - 1);
  prof.frobenius = product - 1;
  prof.genus = div_exact(product, 2, "odd_d_summary genus");
  prof.pseudo_frobenius = std::vector<BigInt>{prof.frobenius};
  return SemigroupSummary{spec, std::move(prof)};
}

namespace detail {

inline void require_d2_preconditions(const SeedPair& seed, const BigInt& vn,
                                     const char* who) {
  if (big_gcd(seed.a, seed.b) != 1) {
    throw std::invalid_argument(std::string(who) + ": gcd(a, b) must be 1");
  }
  if (vn < 2) {
    throw std::invalid_argument(std::string(who) +
                                ": V_n must be >= 2 (V_n = 1 is the "
                                "degenerate semigroup; see analyze)");
  }
}

}  // namespace detail

// Number of even-index blocks needed to reach V_n - 1, i.e. the unique
// kappa >= 1 with F_{2(kappa-1)} <= V_n - 1 < F_{2 kappa}. This is both the
// embedding dimension and the number of subsequence terms that survive as
// minimal generators.
struct EmbeddingResult {
  std::size_t dimension = 0;
  std::vector<BigInt> generators;  // V_n, V_{n+2}, ..., kappa of them
};

inline EmbeddingResult d2_embedding(const SeedPair& seed, std::size_t n) {
  BigInt vn = gen_term(seed, n);
  detail::require_d2_preconditions(seed, vn, "d2_embedding");
  BigInt x = vn - 1;
  std::size_t kappa = 1;
  while (fib(2 * kappa) <= x) ++kappa;
  EmbeddingResult out;
  out.dimension = kappa;
  SequenceCache seq{seed};
  for (std::size_t i = 0; i < kappa; ++i) {
    out.generators.push_back(seq.term(n + 2 * i));
  }
  return out;
}

// Apery set of the d = 2 semigroup with respect to V_n: element for residue
// class (V_{n+2} * x) mod V_n is s(x), for x = 1..V_n - 1, plus 0 for class
// 0. Materializes V_n entries, so it is capped.
struct AperySet {
  BigInt modulus;
  std::vector<BigInt> by_residue;  // index r -> minimal element in class r
};

inline AperySet d2_apery(const SeedPair& seed, std::size_t n,
                         std::uint64_t cap = kDefaultOracleCap) {
  BigInt vn_big = gen_term(seed, n);
  detail::require_d2_preconditions(seed, vn_big, "d2_apery");
  if (vn_big > cap) {
    throw CapExceededError("d2_apery: V_n = " + dec(vn_big) + " exceeds cap " +
                           std::to_string(cap));
  }
  const std::uint64_t vn = to_uint64(vn_big, "d2_apery");
  SequenceCache seq{seed};
  const std::uint64_t step = to_uint64(seq.term(n + 2) % vn_big, "d2_apery");

  AperySet out;
  out.modulus = vn_big;
  out.by_residue.assign(vn, BigInt(-1));
  out.by_residue[0] = 0;
  for (std::uint64_t x = 1; x < vn; ++x) {
    std::uint64_t r = (step * x) % vn;  // stays < 2^62: vn is capped
    if (out.by_residue[r] != -1) {
      throw std::logic_error("d2_apery: residue hit twice; V_{n+2} and V_n "
                             "were not coprime after all");
    }
    out.by_residue[r] = s_value(BigInt(x), seq, n);
  }
  return out;
}

// Frobenius number of the d = 2 semigroup: s(V_n - 1) - V_n.
inline BigInt d2_frobenius(const SeedPair& seed, std::size_t n) {
  BigInt vn = gen_term(seed, n);
  detail::require_d2_preconditions(seed, vn, "d2_frobenius");
  SequenceCache seq{seed};
  return s_value(vn - 1, seq, n) - vn;
}

// Genus of the d = 2 semigroup: P(V_n - 1)/V_n - (V_n - 1)/2, computed on
// the doubled numerator since both terms can be half-integers.
inline BigInt d2_genus(const SeedPair& seed, std::size_t n,
                       SumMode mode = SumMode::block) {
  BigInt vn = gen_term(seed, n);
  detail::require_d2_preconditions(seed, vn, "d2_genus");
  BigInt prefix = s_prefix_sum(vn - 1, seed, n, mode);
  BigInt doubled = 2 * prefix - vn * (vn - 1);
  if (doubled < 0) {
    throw std::logic_error("d2_genus: negative gap count");
  }
  return div_exact(doubled, 2 * vn, "d2_genus");
}

// Closed Frobenius forms for the classical seeds, d = 2.
inline BigInt fibonacci_frobenius_closed(std::size_t n) {
  if (n < 3) {
    throw std::invalid_argument("fibonacci_frobenius_closed: n must be >= 3");
  }
  return fib(2 * n) - fib(n + 2);
}

inline BigInt lucas_frobenius_closed(std::size_t n) {
  if (n < 4) {
    throw std::invalid_argument("lucas_frobenius_closed: n must be >= 4");
  }
  return lucas(2 * n + 1) + lucas(2 * n - 1) - lucas(n + 2);
}

enum class Family { fibonacci, lucas };

// Closed embedding dimension: floor((n+1)/2) for the Fibonacci seed
// (n >= 3), floor((n+3)/2) for the Lucas seed (n >= 4).
inline std::size_t embedding_closed(Family family, std::size_t n) {
  switch (family) {
    case Family::fibonacci:
      if (n < 3) {
        throw std::invalid_argument("embedding_closed: fibonacci needs n >= 3");
      }
      return (n + 1) / 2;
    case Family::lucas:
      if (n < 4) {
        throw std::invalid_argument("embedding_closed: lucas needs n >= 4");
      }
      return (n + 3) / 2;
  }
  throw std::invalid_argument("embedding_closed: unknown family");
}

// Recurrence state for the Fibonacci-seed genus: sigma[k] is the prefix sum
// P(F_{2k+2} - 1) and rho[k-1] (= rho_k) the block sum over
// [F_{2k}, F_{2k+1} - 1], reproduced here purely through the recurrences
//   sigma_k = 3 sigma_{k-1} - sigma_{k-2} + F_{n+4k-1} + F_{2k-1} F_{n+2k}
//   rho_k   = sigma_k - 2 sigma_{k-1} - F_{2k+1} F_{n+2k}
// with sigma_0 = 0 and sigma_1 = 3 F_{n+2} (so rho_1 = F_{n+2}).
struct GenusRecurrenceState {
  std::vector<BigInt> sigma;  // sigma[k], k = 0..k_top
  std::vector<BigInt> rho;    // rho[k-1] = rho_k, k = 1..k_top
};

inline std::pair<BigInt, GenusRecurrenceState> fibonacci_genus_recurrence(
    std::size_t n) {
  if (n < 3) {
    throw std::invalid_argument("fibonacci_genus_recurrence: n must be >= 3");
  }
  const std::size_t kappa = (n + 1) / 2;
  const std::size_t k_top = kappa - 1;  // >= 1 for n >= 3

  GenusRecurrenceState st;
  st.sigma.resize(k_top + 1);
  st.sigma[0] = 0;
  st.sigma[1] = 3 * fib(n + 2);
  for (std::size_t k = 2; k <= k_top; ++k) {
    st.sigma[k] = 3 * st.sigma[k - 1] - st.sigma[k - 2] + fib(n + 4 * k - 1) +
                  fib(2 * k - 1) * fib(n + 2 * k);
  }
  st.rho.resize(k_top);
  for (std::size_t k = 1; k <= k_top; ++k) {
    st.rho[k - 1] =
        st.sigma[k] - 2 * st.sigma[k - 1] - fib(2 * k + 1) * fib(n + 2 * k);
  }

  // n odd means n = 2 kappa - 1 and the final partial block contributes
  // rho_{kappa-1} on top of sigma_{kappa-2}; n even means n = 2 kappa and
  // sigma_{kappa-1} already equals the whole prefix sum P(F_n - 1).
  BigInt total = (n % 2 == 1) ? st.sigma[kappa - 2] + st.rho[kappa - 2]
                              : st.sigma[kappa - 1];
  BigInt fn = fib(n);
  BigInt doubled = 2 * total - fn * (fn - 1);
  BigInt genus = div_exact(doubled, 2 * fn, "fibonacci_genus_recurrence");
  return {std::move(genus), std::move(st)};
}

struct AnalyzeOptions {
  // Pseudo-Frobenius for d = 2 has no closed form and is delegated to the
  // oracle; skip it (leave the field empty) when V_n exceeds this cap.
  std::uint64_t pf_cap = kDefaultOracleCap;
  SumMode genus_mode = SumMode::block;
};

// One-stop summary: existence gate, degenerate gate, then per-step-width
// dispatch. Even d > 2 raises UnsupportedStepError (no theory to apply);
// V_n = 1 short-circuits to the degenerate profile for every d, since 1
// alone generates all of N_0 no matter what follows it.
inline SemigroupSummary analyze(const SubsequenceSpec& spec,
                                const AnalyzeOptions& options = {}) {
  if (!existence(spec)) {
    return SemigroupSummary{spec, std::nullopt};
  }
  BigInt vn = gen_term(spec.seed, spec.n);
  if (vn == 1) {
    return SemigroupSummary{spec, detail::degenerate_profile()};
  }
  if (spec.d % 2 == 1) {
    return odd_d_summary(spec);
  }
  if (spec.d != 2) {
    throw UnsupportedStepError(
        "analyze: even step width d = " + std::to_string(spec.d) +
        " > 2 is not covered by the closed-form theory");
  }

  SemigroupProfile prof;
  EmbeddingResult emb = d2_embedding(spec.seed, spec.n);
  prof.minimal_generators = std::move(emb.generators);
  prof.embedding_dimension = emb.dimension;
  prof.frobenius = d2_frobenius(spec.seed, spec.n);
  prof.genus = d2_genus(spec.seed, spec.n, options.genus_mode);
  if (vn <= options.pf_cap) {
    try {
      GeneratorSet gs = GeneratorSet::from_bigints(prof.minimal_generators);
      std::vector<BigInt> pf;
      for (std::int64_t f : oracle_pf(gs, options.pf_cap)) {
        pf.emplace_back(static_cast<long>(f));
      }
      prof.pseudo_frobenius = std::move(pf);
    } catch (const CapExceededError&) {
      // Generators outside machine width: leave pseudo_frobenius empty.
    }
  }
  return SemigroupSummary{spec, std::move(prof)};
}

}  // namespace fibsgp
