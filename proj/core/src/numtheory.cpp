#include <coverkit/numtheory.hpp>

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace coverkit {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::uint64_t n) {
  std::vector<Integer> c(n + 1);
  c[0] = -1;
  c[n] += 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& monic) const {
  if (monic.is_zero() || monic.leading() != 1) {
    throw std::invalid_argument("divisor must be monic");
  }
  if (degree() < monic.degree()) {
    if (is_zero()) return {};
    throw std::domain_error("polynomial division is not exact");
  }
  std::vector<Integer> rem = coeffs_;
  const std::size_t dd = monic.coeffs_.size() - 1;
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Integer c = rem[i];
    if (sgn(c) == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) {
      if (sgn(monic.coeffs_[j]) != 0) rem[i - dd + j] -= c * monic.coeffs_[j];
    }
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (sgn(rem[i]) != 0) throw std::domain_error("polynomial division is not exact");
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

inline namespace numtheory {

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors_of: n must be positive");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Integer lcm_all(std::span<const Modulus> ns) {
  if (ns.empty()) throw std::invalid_argument("lcm_all: empty list");
  Integer acc = 1;
  for (Modulus n : ns) {
    if (n == 0) throw std::invalid_argument("lcm_all: moduli must be positive");
    Integer v(static_cast<unsigned long>(n));
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_mpz_t());
  }
  return acc;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<Integer, unsigned>> out;
  Integer rest = n;
  Integer p = 2;
  while (p * p <= rest) {
    if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      unsigned e = 0;
      while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (rest > 1) out.emplace_back(rest, 1u);
  return out;
}

namespace {

std::mutex g_cyclo_mutex;
std::map<std::uint64_t, std::shared_ptr<const IntPolynomial>> g_cyclo_memo;

std::shared_ptr<const IntPolynomial> cyclotomic_locked(std::uint64_t n) {
  if (auto it = g_cyclo_memo.find(n); it != g_cyclo_memo.end()) return it->second;
  IntPolynomial q = IntPolynomial::x_pow_minus_one(n);
  for (std::uint64_t d : divisors_of(n)) {
    if (d == n) break;
    q = q.divide_exact(*cyclotomic_locked(d));
  }
  auto ptr = std::make_shared<const IntPolynomial>(std::move(q));
  g_cyclo_memo.emplace(n, ptr);
  return ptr;
}

}  // namespace

std::shared_ptr<const IntPolynomial> cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly: N must be positive");
  std::lock_guard lock(g_cyclo_mutex);
  return cyclotomic_locked(n);
}

Integer f_additive(const Integer& n) {
  Integer total = 0;
  for (const auto& [p, e] : factorize(n)) total += (p - 1) * e;
  return total;
}

Integer least_prime_factor(const Integer& m) {
  if (m <= 1) throw std::invalid_argument("least_prime_factor: m must exceed 1");
  if (mpz_even_p(m.get_mpz_t())) return 2;
  for (Integer p = 3; p * p <= m; p += 2) {
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) return p;
  }
  return m;
}

}  // namespace numtheory
}  // namespace coverkit
