#pragma once

/**
 * Formula-vs-oracle sweep. For every (n, d) in a rectangle this runs the
 * closed-form layer and the brute-force oracle side by side and records
 * per-check outcomes. The oracle is always handed *more* subsequence terms
 * than the theory claims are needed (five for odd d, kappa + 2 for d = 2),
 * so agreement on minimal generators and embedding dimension is a genuine
 * cross-check rather than an echo.
 *
 * Cases are skipped (never silently dropped) when the subsequence does not
 * generate a numerical semigroup, when the step width is even and > 2, or
 * when the brute-force side would exceed the oracle cap.
 */

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fibsgp/bigint.hpp"
#include "fibsgp/formulas.hpp"
#include "fibsgp/oracle.hpp"

namespace fibsgp {

struct VerifyOptions {
  SeedPair seed{1, 1};
  std::size_t n_lo = 3, n_hi = 10;
  std::size_t d_lo = 1, d_hi = 3;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  unsigned jobs = 1;
};

struct VerifyCheck {
  std::string name;
  std::string formula;  // what the closed-form layer produced
  std::string oracle;   // what brute force produced
  bool ok = false;
};

struct VerifyCase {
  std::size_t n = 0, d = 0;
  enum class Status { pass, fail, skip } status = Status::skip;
  std::string skip_reason;
  std::vector<VerifyCheck> checks;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VerifyCase> cases;  // ordered by (n, d)
  std::size_t passed = 0, failed = 0, skipped = 0;

  bool all_ok() const { return failed == 0; }
};

namespace detail {

inline std::string join_bigints(const std::vector<BigInt>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += dec(v[i]);
  }
  return out + "]";
}

inline std::string join_uints(const std::vector<std::uint64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

inline std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

inline void add_check(VerifyCase& c, std::string name, std::string formula,
                      std::string oracle) {
  bool ok = formula == oracle;
  c.checks.push_back({std::move(name), std::move(formula), std::move(oracle), ok});
}

// Why existence() said no, for humans.
inline std::string nonexistence_reason(const SubsequenceSpec& spec) {
  BigInt g = big_gcd(spec.seed.a, spec.seed.b);
  if (g != 1) return "gcd(a, b) = " + dec(g) + ", not 1";
  BigInt h = big_gcd(gen_term(spec.seed, spec.n), fib(spec.d));
  return "gcd(V_n, F_d) = " + dec(h) + ", not 1";
}

inline VerifyCase evaluate_case(const SeedPair& seed, std::size_t n,
                                std::size_t d, std::uint64_t cap) {
  VerifyCase out;
  out.n = n;
  out.d = d;

  SubsequenceSpec spec{seed, n, d};
  if (!existence(spec)) {
    out.skip_reason = "not a numerical semigroup (" + nonexistence_reason(spec) + ")";
    return out;
  }
  BigInt vn = gen_term(seed, n);
  if (d % 2 == 0 && d > 2 && vn != 1) {
    out.skip_reason = "unsupported step width (even d > 2)";
    return out;
  }
  if (vn > cap) {
    out.skip_reason = "V_n exceeds oracle cap";
    return out;
  }
  if (d % 2 == 1 && vn != 1 && gen_term(seed, n + d) > cap) {
    // The oracle's gap scan for two-generator semigroups runs to about
    // V_n * V_{n+d} steps; cap both factors.
    out.skip_reason = "V_{n+d} exceeds oracle cap";
    return out;
  }

  SemigroupSummary summary = analyze(spec, AnalyzeOptions{cap, SumMode::block});
  const SemigroupProfile& prof = *summary.profile;

  // Hand the oracle more terms than the minimal count the theory predicts.
  std::vector<BigInt> terms;
  std::size_t term_count =
      (d % 2 == 1 || prof.degenerate) ? 5 : prof.embedding_dimension + 2;
  SequenceCache seq{seed};
  for (std::size_t k = 0; k < term_count; ++k) {
    terms.push_back(seq.term(n + k * d));
  }
  GeneratorSet gs;
  try {
    gs = GeneratorSet::from_bigints(terms);
  } catch (const CapExceededError&) {
    out.skip_reason = "subsequence term exceeds 64-bit oracle width";
    return out;
  }

  std::vector<BigInt> oracle_gens;
  for (std::uint64_t g : oracle_minimal_generators(gs, cap)) {
    oracle_gens.emplace_back(static_cast<unsigned long>(g));
  }
  add_check(out, "minimal_generators", join_bigints(prof.minimal_generators),
            join_bigints(oracle_gens));
  add_check(out, "embedding_dimension",
            std::to_string(prof.embedding_dimension),
            std::to_string(oracle_gens.size()));
  add_check(out, "frobenius", dec(prof.frobenius),
            std::to_string(oracle_frobenius(gs, cap)));
  add_check(out, "genus", dec(prof.genus),
            std::to_string(oracle_genus(gs, cap)));
  if (prof.pseudo_frobenius) {
    add_check(out, "pseudo_frobenius", join_bigints(*prof.pseudo_frobenius),
              join_ints(oracle_pf(gs, cap)));
  }

  if (d == 2 && !prof.degenerate) {
    add_check(out, "genus_direct_mode", dec(d2_genus(seed, n, SumMode::direct)),
              std::to_string(oracle_genus(gs, cap)));

    AperySet formula_ap = d2_apery(seed, n, cap);
    OracleApery oracle_ap = oracle_apery(gs, to_uint64(vn, "verify"), cap);
    std::string mismatch;
    for (std::uint64_t r = 0; r < oracle_ap.modulus; ++r) {
      if (formula_ap.by_residue[r] != BigInt(static_cast<unsigned long>(
                                          oracle_ap.table[r]))) {
        mismatch = "residue " + std::to_string(r) + ": formula " +
                   dec(formula_ap.by_residue[r]) + ", oracle " +
                   std::to_string(oracle_ap.table[r]);
        break;
      }
    }
    std::string classes = std::to_string(oracle_ap.modulus) + " classes";
    if (mismatch.empty()) {
      add_check(out, "apery_set", classes, classes);
    } else {
      add_check(out, "apery_set", mismatch, classes);
    }

    // Closed-form specializations for the classical seeds.
    if (seed == SeedPair{1, 1} && n >= 3) {
      add_check(out, "fibonacci_frobenius_closed",
                dec(fibonacci_frobenius_closed(n)), dec(prof.frobenius));
      add_check(out, "fibonacci_embedding_closed",
                std::to_string(embedding_closed(Family::fibonacci, n)),
                std::to_string(prof.embedding_dimension));
      add_check(out, "fibonacci_genus_recurrence",
                dec(fibonacci_genus_recurrence(n).first), dec(prof.genus));
    }
    if (seed == SeedPair{1, 3} && n >= 4) {
      add_check(out, "lucas_frobenius_closed", dec(lucas_frobenius_closed(n)),
                dec(prof.frobenius));
      add_check(out, "lucas_embedding_closed",
                std::to_string(embedding_closed(Family::lucas, n)),
                std::to_string(prof.embedding_dimension));
    }
  }

  out.status = VerifyCase::Status::pass;
  for (const VerifyCheck& ch : out.checks) {
    if (!ch.ok) {
      out.status = VerifyCase::Status::fail;
      break;
    }
  }
  return out;
}

}  // namespace detail

inline VerifyReport run_verify(const VerifyOptions& options) {
  if (options.n_lo < 1 || options.n_lo > options.n_hi || options.d_lo < 1 ||
      options.d_lo > options.d_hi) {
    throw std::invalid_argument("run_verify: empty or invalid (n, d) ranges");
  }

  std::vector<std::pair<std::size_t, std::size_t>> grid;
  for (std::size_t n = options.n_lo; n <= options.n_hi; ++n) {
    for (std::size_t d = options.d_lo; d <= options.d_hi; ++d) {
      grid.emplace_back(n, d);
    }
  }

  VerifyReport report;
  report.options = options;
  report.cases.resize(grid.size());

  auto work = [&](std::size_t i) {
    report.cases[i] = detail::evaluate_case(options.seed, grid[i].first,
                                            grid[i].second, options.oracle_cap);
  };

  unsigned jobs = options.jobs == 0 ? 1 : options.jobs;
  if (jobs <= 1 || grid.size() <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) work(i);
  } else {
    // Parallel across independent cases only; the result vector is indexed
    // by case, so assembly order never depends on completion order.
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < grid.size();
             i = next.fetch_add(1)) {
          work(i);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  for (const VerifyCase& c : report.cases) {
    switch (c.status) {
      case VerifyCase::Status::pass: ++report.passed; break;
      case VerifyCase::Status::fail: ++report.failed; break;
      case VerifyCase::Status::skip: ++report.skipped; break;
    }
  }
  return report;
}

}  // namespace fibsgp
