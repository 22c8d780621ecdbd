#pragma once

#include <coverkit/base.hpp>

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coverkit {

// Dense polynomial with integer coefficients, lowest degree first.
// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  // x^n - 1
  static IntPolynomial x_pow_minus_one(std::uint64_t n);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Integer& leading() const { return coeffs_.back(); }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  // Exact quotient by a monic divisor; throws std::domain_error on a nonzero
  // remainder.
  IntPolynomial divide_exact(const IntPolynomial& monic) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

inline namespace numtheory {

std::uint64_t euler_phi(std::uint64_t n);

// Ascending.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

Integer lcm_all(std::span<const Modulus> ns);

// Prime factorization by trial division, ascending primes with multiplicity
// collapsed into exponents.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

// Phi_N, memoized for the life of the process. Safe to call concurrently.
std::shared_ptr<const IntPolynomial> cyclotomic_poly(std::uint64_t n);

// Completely additive with f(p) = p - 1 on primes.
Integer f_additive(const Integer& n);

// Throws std::invalid_argument for m <= 1.
Integer least_prime_factor(const Integer& m);

// Nonnegative residue of a modulo n.
inline std::uint64_t mod_floor(std::int64_t a, std::uint64_t n) {
  const auto sn = static_cast<__int128>(n);
  auto r = static_cast<__int128>(a) % sn;
  if (r < 0) r += sn;
  return static_cast<std::uint64_t>(r);
}

}  // namespace numtheory
}  // namespace coverkit
