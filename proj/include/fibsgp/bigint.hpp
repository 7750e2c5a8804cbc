#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fibsgp/errors.hpp"

namespace fibsgp {

// All semigroup elements, sequence terms and weights are exact integers.
// GMP's mpz_class carries the arithmetic; nothing here may ever round.
using BigInt = mpz_class;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool divisible(const BigInt& value, const BigInt& divisor) {
  return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

// Exact division. A failed divisibility check here means a theorem-level
// invariant broke upstream (these quotients are integers by construction),
// so it surfaces as logic_error rather than a recoverable condition.
inline BigInt div_exact(const BigInt& value, const BigInt& divisor,
                        const char* context) {
  if (divisor == 0) {
    throw std::logic_error(std::string("div_exact: zero divisor in ") + context);
  }
  if (!divisible(value, divisor)) {
    throw std::logic_error(std::string("div_exact: ") + context +
                           ": " + value.get_str() + " not divisible by " +
                           divisor.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  return q;
}

inline bool fits_uint64(const BigInt& v) {
  // unsigned long is 64-bit on this platform; good enough for desk scale.
  return v >= 0 && mpz_fits_ulong_p(v.get_mpz_t()) != 0;
}

inline std::uint64_t to_uint64(const BigInt& v, const char* context) {
  if (!fits_uint64(v)) {
    throw CapExceededError(std::string(context) + ": value " + v.get_str() +
                           " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v.get_ui());
}

// Decimal rendering used by every serializer; consumers must never assume
// machine width for these.
inline std::string dec(const BigInt& v) { return v.get_str(); }

}  // namespace fibsgp
