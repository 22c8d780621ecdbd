#pragma once

#include <coverkit/cyclotomic.hpp>

#include <vector>

namespace coverkit {

struct ExpTerm {
  std::int64_t t;
  CyclotomicElement coeff;
};

// X = {x : sum_t c_t exp(2 pi i t x / n) = 0}, periodic modulo n.
struct ExpSequence {
  Modulus modulus;
  std::vector<ExpTerm> terms;

  bool contains(std::int64_t x) const;
  // {t / n : t in R}
  FractionSet frequencies() const;
};

// The exponential sequence equal to a(n): c_0 = 1 and
// c_m = -exp(-2 pi i a m / n). Requires gcd(m, n) = 1.
ExpSequence arithmetic_exp_sequence(std::int64_t a, Modulus n, std::int64_t m);

}  // namespace coverkit
