#pragma once

#include <coverkit/base.hpp>
#include <coverkit/fractions.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coverkit {

// An element of Q(zeta_N) written as sum_j coeffs[j] * zeta_N^j, where
// zeta_N = exp(2 pi i / N). The representation is not canonical: equality and
// zero tests reduce modulo Phi_N first.
class CyclotomicElement {
 public:
  explicit CyclotomicElement(std::uint64_t level = 1);
  CyclotomicElement(std::uint64_t level, std::vector<Rational> coeffs);

  static CyclotomicElement zero(std::uint64_t level) { return CyclotomicElement(level); }
  static CyclotomicElement rational(std::uint64_t level, const Rational& q);
  // zeta_N^(j mod N)
  static CyclotomicElement root_power(std::uint64_t level, std::int64_t j);

  std::uint64_t level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Embeds into level M (N must divide M) via zeta_N = zeta_M^(M/N).
  CyclotomicElement lift(std::uint64_t target_level) const;

  CyclotomicElement& operator+=(const CyclotomicElement& o);
  CyclotomicElement& operator-=(const CyclotomicElement& o);
  CyclotomicElement& operator*=(const Rational& q);
  // Adds q * zeta_N^j in place.
  void add_term(const Rational& q, std::int64_t j);

  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) {
    return a += b;
  }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) {
    return a -= b;
  }
  friend CyclotomicElement operator-(CyclotomicElement a) { return a *= Rational(-1); }
  friend CyclotomicElement operator*(CyclotomicElement a, const Rational& q) {
    return a *= q;
  }
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);

  // Remainder modulo Phi_N: phi(N) coefficients.
  std::vector<Rational> reduced() const;
  bool is_zero() const;
  // The rational value, when the element lies in Q.
  std::optional<Rational> as_rational() const;

  std::string to_string() const;

 private:
  void require_same_level(const CyclotomicElement& o, const char* op) const;

  std::uint64_t level_;
  std::vector<Rational> coeffs_;
};

std::uint64_t common_level(std::uint64_t a, std::uint64_t b);

// a == b in Q(zeta), after lifting both to the lcm of their levels.
bool equal_in_field(const CyclotomicElement& a, const CyclotomicElement& b);

// Evaluates (1/n) sum_{r<n} zeta_N^((N/n) a r) exactly and reports whether it
// equals the indicator [n | a]. Throws std::invalid_argument unless n | N.
bool indicator_sum_check(std::uint64_t level, std::uint64_t n, std::int64_t a);

// sum_j coeffs[j] * z_j^x with z_j = exp(-2 pi i alphas[j]), at level N.
// Alphas must be distinct with denominators dividing N; coefficient levels
// must divide N.
CyclotomicElement exp_sum_eval(std::span<const CyclotomicElement> coeffs,
                               std::span<const Fraction> alphas, std::int64_t x,
                               std::uint64_t level);

}  // namespace coverkit
