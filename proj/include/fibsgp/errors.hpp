#pragma once

#include <stdexcept>
#include <string>

namespace fibsgp {

// Thrown when a request falls outside what the closed-form theory covers:
// step widths d that are even and greater than 2.
class UnsupportedStepError : public std::domain_error {
 public:
  explicit UnsupportedStepError(const std::string& what_arg)
      : std::domain_error(what_arg) {}
};

// Thrown when a brute-force computation would exceed its configured cap
// (oracle modulus too large, generator outside machine width, ...).
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

}  // namespace fibsgp
