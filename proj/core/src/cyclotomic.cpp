#include <coverkit/cyclotomic.hpp>
#include <coverkit/numtheory.hpp>

#include <numeric>
#include <set>
#include <sstream>

namespace coverkit {

CyclotomicElement::CyclotomicElement(std::uint64_t level)
    : level_(level), coeffs_(level) {
  if (level == 0) throw std::invalid_argument("cyclotomic level must be positive");
}

CyclotomicElement::CyclotomicElement(std::uint64_t level, std::vector<Rational> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
  if (level == 0) throw std::invalid_argument("cyclotomic level must be positive");
  if (coeffs_.size() != level) {
    throw std::invalid_argument("cyclotomic coefficient count must equal the level");
  }
}

CyclotomicElement CyclotomicElement::rational(std::uint64_t level, const Rational& q) {
  CyclotomicElement e(level);
  e.coeffs_[0] = q;
  return e;
}

CyclotomicElement CyclotomicElement::root_power(std::uint64_t level, std::int64_t j) {
  CyclotomicElement e(level);
  e.coeffs_[mod_floor(j, level)] = 1;
  return e;
}

CyclotomicElement CyclotomicElement::lift(std::uint64_t target_level) const {
  if (target_level == 0 || target_level % level_ != 0) {
    throw std::invalid_argument("cannot lift level " + std::to_string(level_) +
                                " to level " + std::to_string(target_level));
  }
  if (target_level == level_) return *this;
  const std::uint64_t step = target_level / level_;
  CyclotomicElement out(target_level);
  for (std::uint64_t j = 0; j < level_; ++j) out.coeffs_[j * step] = coeffs_[j];
  return out;
}

void CyclotomicElement::require_same_level(const CyclotomicElement& o,
                                           const char* op) const {
  if (o.level_ != level_) {
    throw std::invalid_argument(std::string("cyclotomic ") + op + ": level mismatch (" +
                                std::to_string(level_) + " vs " +
                                std::to_string(o.level_) + "); lift to a common level");
  }
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  require_same_level(o, "add");
  for (std::uint64_t j = 0; j < level_; ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
  require_same_level(o, "subtract");
  for (std::uint64_t j = 0; j < level_; ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

void CyclotomicElement::add_term(const Rational& q, std::int64_t j) {
  coeffs_[mod_floor(j, level_)] += q;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  a.require_same_level(b, "multiply");
  const std::uint64_t n = a.level_;
  CyclotomicElement out(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::uint64_t j = 0; j < n; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      const std::uint64_t k = (i + j) % n;
      out.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

std::vector<Rational> CyclotomicElement::reduced() const {
  const auto phi = cyclotomic_poly(level_);
  const auto& p = phi->coeffs();
  const std::size_t deg = p.size() - 1;
  std::vector<Rational> r = coeffs_;
  // Long division by the monic Phi_N; only its nonzero coefficients matter.
  std::vector<std::pair<std::size_t, Rational>> nz;
  for (std::size_t j = 0; j < deg; ++j) {
    if (sgn(p[j]) != 0) nz.emplace_back(j, Rational(p[j]));
  }
  Rational t;
  for (std::size_t i = r.size(); i-- > deg;) {
    if (sgn(r[i]) == 0) continue;
    for (const auto& [j, pj] : nz) {
      t = r[i] * pj;
      r[i - deg + j] -= t;
    }
    r[i] = 0;
  }
  r.resize(deg);
  return r;
}

bool CyclotomicElement::is_zero() const {
  bool all_zero = true;
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return true;
  for (const auto& c : reduced()) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

std::optional<Rational> CyclotomicElement::as_rational() const {
  const auto r = reduced();
  for (std::size_t j = 1; j < r.size(); ++j) {
    if (sgn(r[j]) != 0) return std::nullopt;
  }
  return r.empty() ? Rational(0) : r[0];
}

std::string CyclotomicElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::uint64_t j = 0; j < level_; ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coverkit::to_string(coeffs_[j]) << "*z^" << j;
  }
  if (first) os << "0";
  os << " (level " << level_ << ")";
  return os.str();
}

std::uint64_t common_level(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

bool equal_in_field(const CyclotomicElement& a, const CyclotomicElement& b) {
  const std::uint64_t n = common_level(a.level(), b.level());
  return (a.lift(n) - b.lift(n)).is_zero();
}

bool indicator_sum_check(std::uint64_t level, std::uint64_t n, std::int64_t a) {
  if (n == 0 || level % n != 0) {
    throw std::invalid_argument("indicator_sum_check: n must divide N");
  }
  const std::uint64_t step = level / n;
  const std::uint64_t base = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(step) * mod_floor(a, level)) % level);
  CyclotomicElement sum(level);
  std::uint64_t e = 0;
  for (std::uint64_t r = 0; r < n; ++r) {
    sum.add_term(Rational(1), static_cast<std::int64_t>(e));
    e = (e + base) % level;
  }
  sum *= Rational(1, static_cast<unsigned long>(n));
  const Rational expected = (mod_floor(a, n) == 0) ? 1 : 0;
  return (sum - CyclotomicElement::rational(level, expected)).is_zero();
}

CyclotomicElement exp_sum_eval(std::span<const CyclotomicElement> coeffs,
                               std::span<const Fraction> alphas, std::int64_t x,
                               std::uint64_t level) {
  if (coeffs.size() != alphas.size()) {
    throw std::invalid_argument("exp_sum_eval: coefficient and alpha counts differ");
  }
  if (std::set<Fraction>(alphas.begin(), alphas.end()).size() != alphas.size()) {
    throw std::invalid_argument("exp_sum_eval: alphas must be distinct");
  }
  const Integer big_level(static_cast<unsigned long>(level));
  CyclotomicElement total(level);
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    const Integer den = alphas[j].den();
    if (!mpz_divisible_p(big_level.get_mpz_t(), den.get_mpz_t())) {
      throw std::invalid_argument("exp_sum_eval: alpha denominator must divide N");
    }
    // z_j^x = zeta_N^(-alpha_j N x)
    Integer e = -(alphas[j].num() * (big_level / den)) * Integer(static_cast<long>(x));
    mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), big_level.get_mpz_t());
    const auto shift = static_cast<std::int64_t>(e.get_ui());
    const CyclotomicElement c = coeffs[j].lift(level);
    for (std::uint64_t i = 0; i < level; ++i) {
      if (sgn(c.coeffs()[i]) == 0) continue;
      total.add_term(c.coeffs()[i], static_cast<std::int64_t>(i) + shift);
    }
  }
  return total;
}

}  // namespace coverkit
