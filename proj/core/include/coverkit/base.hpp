#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coverkit {

// Unbounded integers and rationals; every verdict in the library is exact.
using Integer = mpz_class;
using Rational = mpq_class;

using Modulus = std::uint64_t;

// Base of all recoverable library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem's hypothesis does not hold for the given input.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A fast criterion disagreed with its brute-force reference. Never expected.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enumeration limits shared by the window checks and the oracles.
struct Caps {
  std::uint64_t period_points = 1'000'000;
  std::uint64_t box_points = 1'000'000;
  std::size_t max_subset_k = 20;
};

// Converts `value` to a machine integer, or throws CapExceeded naming `what`.
std::uint64_t to_u64_capped(const Integer& value, std::uint64_t cap,
                            const std::string& what);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

}  // namespace coverkit
