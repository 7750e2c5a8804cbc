#pragma once

/**
 * Greedy decompositions of positive integers over the even-indexed
 * Fibonacci numbers F_2, F_4, F_6, ..., and the induced map
 *
 *     s(x) = sum_i lambda_i * V_{n+2i}   where   x = sum_i lambda_i * F_{2i}
 *
 * which sends x in [1, V_n - 1] to the minimal element of the step-2
 * subsequence semigroup congruent to V_{n+2} x (mod V_n). The greedy
 * coefficients always lie in {0, 1, 2} with a nonzero top coefficient,
 * s is strictly increasing, and among all ways to write x over the F_{2i}
 * the greedy one minimizes the induced weight. Prefix sums of s feed the
 * genus computation; the block engine below makes them polylogarithmic.
 */

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fibsgp/bigint.hpp"
#include "fibsgp/fib_seq.hpp"

namespace fibsgp {

// x = sum_{i=1..k} coeffs[i-1] * F_{2i}, coeffs[i-1] = lambda_i in {0,1,2},
// lambda_k >= 1.
struct GreedyRep {
  BigInt x;
  std::vector<int> coeffs;

  std::size_t top_index() const { return coeffs.size(); }
};

// Largest k with F_{2k} <= x (so F_{2k} <= x < F_{2k+2}); x >= 1.
inline std::size_t top_even_block(const BigInt& x) {
  std::size_t k = 1;
  while (fib(2 * (k + 1)) <= x) ++k;
  return k;
}

inline GreedyRep greedy_decompose(const BigInt& x) {
  if (x < 1) {
    throw std::invalid_argument("greedy_decompose: x must be >= 1");
  }
  const std::size_t k = top_even_block(x);
  std::vector<int> coeffs(k, 0);
  BigInt rem = x;
  for (std::size_t j = k; j >= 1; --j) {
    BigInt f = fib(2 * j);
    BigInt q = rem / f;  // exact floor: both operands nonnegative
    if (q < 0 || q > 2) {
      throw std::logic_error("greedy_decompose: coefficient outside {0,1,2}");
    }
    coeffs[j - 1] = static_cast<int>(q.get_ui());
    rem -= q * f;
  }
  if (rem != 0 || coeffs[k - 1] < 1) {
    throw std::logic_error("greedy_decompose: reconstruction invariant broke");
  }
  return GreedyRep{x, std::move(coeffs)};
}

// sum_i lambda_i * V_{n+2i} for an already-computed representation.
inline BigInt weight(const GreedyRep& rep, const SequenceCache& seq,
                     std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("weight: n must be >= 1");
  }
  BigInt total = 0;
  for (std::size_t i = 1; i <= rep.coeffs.size(); ++i) {
    int c = rep.coeffs[i - 1];
    if (c != 0) total += c * seq.term(n + 2 * i);
  }
  return total;
}

// s(x) for x >= 1. (s(0) = 0 is used internally by the prefix-sum engine
// but is not a semigroup statement, so the public entry point rejects it.)
inline BigInt s_value(const BigInt& x, const SequenceCache& seq,
                      std::size_t n) {
  if (x < 1) {
    throw std::invalid_argument("s_value: x must be >= 1");
  }
  return weight(greedy_decompose(x), seq, n);
}

// Closed forms of s at the distinguished arguments F_m, L_m, F_m - 1,
// L_m - 1. Valid ranges:
//   fib_arg          m >= 1
//   lucas_arg        m >= 2   (at m = 1, L_1 = 1 = F_1; use fib_arg)
//   fib_arg_minus_1  m >= 3
//   lucas_arg_minus_1 m >= 4  (at m = 3, L_3 - 1 = 3 is exactly F_4 and
//                              s(3) = V_{n+4}; the closed expression below
//                              would overshoot by V_n, so m = 3 is rejected)
enum class SpecialArg { fib_arg, lucas_arg, fib_arg_minus_1, lucas_arg_minus_1 };

inline BigInt s_special(SpecialArg kind, std::size_t m,
                        const SequenceCache& seq, std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("s_special: n must be >= 1");
  }
  switch (kind) {
    case SpecialArg::fib_arg:
      if (m < 1) throw std::invalid_argument("s_special: fib_arg needs m >= 1");
      if (m % 2 == 1) return seq.term(n + m) + seq.term(n);
      return seq.term(n + m);
    case SpecialArg::lucas_arg:
      if (m < 2) throw std::invalid_argument("s_special: lucas_arg needs m >= 2");
      if (m % 2 == 1) return seq.term(n + m + 1) + seq.term(n + m - 1);
      return seq.term(n + m + 1) + seq.term(n + m - 1) + seq.term(n);
    case SpecialArg::fib_arg_minus_1:
      if (m < 3) {
        throw std::invalid_argument("s_special: fib_arg_minus_1 needs m >= 3");
      }
      return seq.term(n + m) - seq.term(n + 1);
    case SpecialArg::lucas_arg_minus_1:
      if (m < 4) {
        throw std::invalid_argument("s_special: lucas_arg_minus_1 needs m >= 4");
      }
      return seq.term(n + m + 1) + seq.term(n + m - 1) - seq.term(n + 1);
  }
  throw std::invalid_argument("s_special: unknown kind");
}

enum class SumMode { direct, block };

// Prefix sums P(t) = sum_{x=1..t} s(x) with O(log^2 t) big-integer work.
//
// The engine caches two families of full-block sums per (seed, n):
//   even_[k] = P(F_{2k}   - 1)
//   odd_[k]  = P(F_{2k+1} - 1)
// built from even_[1] = 0, odd_[1] = V_{n+2} via
//   even_[k] = even_[k-1] + odd_[k-1] + F_{2k-1} * V_{n+2k-2}
//   odd_[k]  = even_[k]   + odd_[k-1] + F_{2k-1} * V_{n+2k}
// (each block [F_{2k}, t] contributes a constant V_{n+2k} per element on top
// of a shifted copy of the prefix, because s(x) = s(x - F_{2k}) + V_{n+2k}
// whenever F_{2k} <= x < F_{2k+2}). A general P(t) then peels the top block:
//   P(t) = even_[k] + (t - F_{2k} + 1) * V_{n+2k} + P(t - F_{2k}),
// and the top block index strictly decreases after at most two peels.
class PrefixSums {
 public:
  PrefixSums(const SeedPair& seed, std::size_t n) : seq_(seed), n_(n) {
    if (n < 1) {
      throw std::invalid_argument("PrefixSums: n must be >= 1");
    }
  }

  const SequenceCache& sequence() const { return seq_; }

  BigInt up_to(const BigInt& t) const {
    if (t <= 0) return 0;
    std::lock_guard<std::mutex> lock(mu_);
    ensure_blocks(top_even_block(t));
    BigInt total = 0;
    BigInt rem = t;
    while (rem >= 1) {
      std::size_t k = top_even_block(rem);
      BigInt f2k = fib(2 * k);
      total += even_[k] + (rem - f2k + 1) * seq_.term(n_ + 2 * k);
      rem -= f2k;
    }
    return total;
  }

 private:
  void ensure_blocks(std::size_t k_top) const {
    if (even_.empty()) {
      even_.assign(2, 0);             // even_[1] = P(F_2 - 1) = P(0) = 0
      odd_.assign(2, 0);
      odd_[1] = seq_.term(n_ + 2);    // odd_[1] = P(F_3 - 1) = s(1)
    }
    for (std::size_t k = even_.size() - 1; k < k_top; /* grown below */) {
      ++k;
      BigInt f = fib(2 * k - 1);
      even_.push_back(even_[k - 1] + odd_[k - 1] + f * seq_.term(n_ + 2 * k - 2));
      odd_.push_back(even_[k] + odd_[k - 1] + f * seq_.term(n_ + 2 * k));
    }
  }

  SequenceCache seq_;
  std::size_t n_;
  mutable std::mutex mu_;
  mutable std::vector<BigInt> even_, odd_;
};

// One-shot P(t). direct mode literally sums s(1..t) and is meant for
// cross-checks at desk scale; block mode delegates to the engine above.
inline BigInt s_prefix_sum(const BigInt& t, const SeedPair& seed,
                           std::size_t n, SumMode mode = SumMode::block) {
  if (n < 1) {
    throw std::invalid_argument("s_prefix_sum: n must be >= 1");
  }
  if (t <= 0) return 0;
  if (mode == SumMode::block) {
    return PrefixSums(seed, n).up_to(t);
  }
  SequenceCache seq{seed};
  BigInt total = 0;
  for (BigInt x = 1; x <= t; ++x) {
    total += s_value(x, seq, n);
  }
  return total;
}

}  // namespace fibsgp
