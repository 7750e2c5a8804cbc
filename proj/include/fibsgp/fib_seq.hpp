#pragma once

/**
 * Generalized Fibonacci sequences V_1 = a, V_2 = b, V_m = V_{m-1} + V_{m-2}
 * with exact arithmetic and per-seed memoization, plus the classical
 * Fibonacci (seed 1,1) and Lucas (seed 1,3) specializations and a checker
 * for the shift/step/congruence/telescoping identities every other module
 * leans on.
 */

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "fibsgp/bigint.hpp"

namespace fibsgp {

// Positive seed (a, b) for V_1 = a, V_2 = b. Nothing here requires
// gcd(a, b) = 1; the semigroup layer checks that where it matters.
struct SeedPair {
  BigInt a;
  BigInt b;

  SeedPair(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a < 1 || b < 1) {
      throw std::invalid_argument("SeedPair: seed values must be >= 1");
    }
  }

  bool operator==(const SeedPair& o) const { return a == o.a && b == o.b; }
};

// Extend-only memo of one sequence. term(m) behaves as a pure function of
// (seed, m): the cache only ever appends recurrence-consistent values, and a
// mutex keeps concurrent readers from observing a partial extension.
class SequenceCache {
 public:
  explicit SequenceCache(SeedPair seed) : seed_(std::move(seed)) {
    terms_.push_back(seed_.a);  // V_1
    terms_.push_back(seed_.b);  // V_2
  }

  SequenceCache(const SequenceCache&) = delete;
  SequenceCache& operator=(const SequenceCache&) = delete;

  const SeedPair& seed() const { return seed_; }

  // V_m for m >= 1 (the recurrence has no canonical 0th term for arbitrary
  // seeds; fib()/lucas() below add the standard F_0 = 0, L_0 = 2 only).
  BigInt term(std::size_t m) const {
    if (m < 1) {
      throw std::invalid_argument("SequenceCache::term: index must be >= 1");
    }
    std::lock_guard<std::mutex> lock(mu_);
    while (terms_.size() < m) {
      terms_.push_back(terms_[terms_.size() - 1] + terms_[terms_.size() - 2]);
    }
    return terms_[m - 1];
  }

 private:
  SeedPair seed_;
  mutable std::mutex mu_;
  mutable std::vector<BigInt> terms_;
};

// F_0 = 0, F_1 = F_2 = 1, ... (shared process-wide memo).
inline BigInt fib(std::size_t m) {
  if (m == 0) return 0;
  static SequenceCache cache{SeedPair{1, 1}};
  return cache.term(m);
}

// L_0 = 2, L_1 = 1, L_2 = 3, ... (shared process-wide memo).
inline BigInt lucas(std::size_t m) {
  if (m == 0) return 2;
  static SequenceCache cache{SeedPair{1, 3}};
  return cache.term(m);
}

// One-shot V_m without touching any shared cache; m >= 1.
inline BigInt gen_term(const SeedPair& seed, std::size_t m) {
  if (m < 1) {
    throw std::invalid_argument("gen_term: index must be >= 1");
  }
  if (m == 1) return seed.a;
  BigInt prev = seed.a, cur = seed.b;
  for (std::size_t i = 3; i <= m; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Identity ids: 1 = shift decomposition V_{m+n} = F_{n-1} V_m + F_n V_{m+1},
// 2 = step relation F_d V_{n+kd} = (-1)^{d-1} F_{(k-1)d} V_n + F_{kd} V_{n+d},
// 3 = congruence V_{m+kd} == V_{m+2} F_{kd}  (mod V_m),
// 4 = telescoped even-step sum  sum_{i=1..k} V_{n+2i} = V_{n+2k+1} - V_{n+1}.
struct IdentityViolation {
  int identity;
  std::size_t m, n, k, d;  // indices involved; unused ones are 0
  BigInt lhs, rhs;
};

struct IdentityReport {
  std::size_t checks = 0;
  std::vector<IdentityViolation> violations;
  bool all_passed() const { return violations.empty(); }
};

// Sweeps all four identities over 1 <= m, n <= m_max, 1 <= k <= k_max,
// 1 <= d <= d_max. Expected outcome is an empty violation list; the report
// exists so a failure pinpoints the exact tuple instead of just "false".
inline IdentityReport identity_report(const SeedPair& seed, std::size_t m_max,
                                      std::size_t k_max, std::size_t d_max) {
  if (m_max < 1 || k_max < 1 || d_max < 1) {
    throw std::invalid_argument("identity_report: bounds must be >= 1");
  }
  SequenceCache v{seed};
  IdentityReport report;

  // (1) shift decomposition; n = 1 exercises F_0 = 0.
  for (std::size_t m = 1; m <= m_max; ++m) {
    for (std::size_t n = 1; n <= m_max; ++n) {
      BigInt lhs = v.term(m + n);
      BigInt rhs = fib(n - 1) * v.term(m) + fib(n) * v.term(m + 1);
      ++report.checks;
      if (lhs != rhs) report.violations.push_back({1, m, n, 0, 0, lhs, rhs});
    }
  }

  // (2) step relation; k = 1 exercises F_0 = 0 again.
  for (std::size_t n = 1; n <= m_max; ++n) {
    for (std::size_t k = 1; k <= k_max; ++k) {
      for (std::size_t d = 1; d <= d_max; ++d) {
        BigInt lhs = fib(d) * v.term(n + k * d);
        BigInt rhs = fib(k * d) * v.term(n + d);
        BigInt cross = fib((k - 1) * d) * v.term(n);
        if (d % 2 == 1) {
          rhs += cross;
        } else {
          rhs -= cross;
        }
        ++report.checks;
        if (lhs != rhs) report.violations.push_back({2, 0, n, k, d, lhs, rhs});
      }
    }
  }

  // (3) congruence mod V_m.
  for (std::size_t m = 1; m <= m_max; ++m) {
    for (std::size_t k = 1; k <= k_max; ++k) {
      for (std::size_t d = 1; d <= d_max; ++d) {
        BigInt diff = v.term(m + k * d) - v.term(m + 2) * fib(k * d);
        ++report.checks;
        if (!divisible(diff, v.term(m))) {
          report.violations.push_back(
              {3, m, 0, k, d, v.term(m + k * d), v.term(m + 2) * fib(k * d)});
        }
      }
    }
  }

  // (4) telescoped even-step sum.
  for (std::size_t n = 1; n <= m_max; ++n) {
    BigInt running = 0;
    for (std::size_t k = 1; k <= k_max; ++k) {
      running += v.term(n + 2 * k);
      BigInt rhs = v.term(n + 2 * k + 1) - v.term(n + 1);
      ++report.checks;
      if (running != rhs) report.violations.push_back({4, 0, n, k, 0, running, rhs});
    }
  }

  return report;
}

}  // namespace fibsgp
