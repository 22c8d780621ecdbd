#include <coverkit/fractions.hpp>
#include <coverkit/numtheory.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace coverkit {

namespace {

Rational frac_part(Rational q) {
  q.canonicalize();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  q -= fl;
  return q;
}

}  // namespace

Fraction::Fraction(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("Fraction: zero denominator");
  value_ = frac_part(Rational(num, den));
}

Fraction::Fraction(const Rational& q) : value_(frac_part(q)) {}

Fraction operator+(const Fraction& a, const Fraction& b) {
  Fraction out;
  out.value_ = a.value_ + b.value_;
  if (out.value_ >= 1) out.value_ -= 1;
  return out;
}

std::string Fraction::to_string() const { return coverkit::to_string(value_); }

FractionSet::FractionSet(std::vector<Fraction> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

FractionSet::FractionSet(std::initializer_list<Fraction> elems)
    : FractionSet(std::vector<Fraction>(elems)) {}

bool FractionSet::contains(const Fraction& f) const {
  return std::binary_search(elems_.begin(), elems_.end(), f);
}

bool FractionSet::includes(const FractionSet& other) const {
  return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(),
                       other.elems_.end());
}

std::string FractionSet::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ", ";
    os << elems_[i].to_string();
  }
  os << "}";
  return os.str();
}

FractionSet multiples_set(std::span<const Modulus> moduli) {
  if (moduli.empty()) throw std::invalid_argument("multiples_set: empty moduli list");
  std::vector<Fraction> all;
  for (Modulus n : moduli) {
    if (n == 0) throw std::invalid_argument("multiples_set: moduli must be positive");
    const Integer den(static_cast<unsigned long>(n));
    for (Modulus r = 0; r < n; ++r) {
      all.emplace_back(Integer(static_cast<unsigned long>(r)), den);
    }
  }
  return FractionSet(std::move(all));
}

Integer phi_sum_cardinality(std::span<const Modulus> moduli) {
  if (moduli.empty()) {
    throw std::invalid_argument("phi_sum_cardinality: empty moduli list");
  }
  std::set<std::uint64_t> divisors;
  for (Modulus n : moduli) {
    for (std::uint64_t d : divisors_of(n)) divisors.insert(d);
  }
  Integer total = 0;
  for (std::uint64_t d : divisors) total += static_cast<unsigned long>(euler_phi(d));
  return total;
}

FractionSet sumset_mod1(const FractionSet& a, const FractionSet& b) {
  std::vector<Fraction> out;
  out.reserve(a.size() * b.size());
  for (const Fraction& x : a) {
    for (const Fraction& y : b) out.push_back(x + y);
  }
  return FractionSet(std::move(out));
}

FractionSet subset_sum_set(std::span<const Fraction> terms) {
  FractionSet acc{Fraction{}};
  for (const Fraction& t : terms) acc = sumset_mod1(acc, FractionSet{Fraction{}, t});
  return acc;
}

std::uint64_t window_bound_W(std::span<const FractionSet> sets, std::uint64_t m,
                             std::size_t max_k) {
  const std::size_t k = sets.size();
  if (m < 1 || m > k) {
    throw HypothesisError("window_bound_W: m = " + std::to_string(m) +
                          " outside [1, " + std::to_string(k) + "]");
  }
  if (k > max_k) {
    throw CapExceeded("window_bound_W: too many subsets (k = " + std::to_string(k) +
                      " exceeds enumeration cap " + std::to_string(max_k) + ")");
  }
  std::uint64_t best = 0;
  for_each_combination(k, k - m + 1, [&](std::span<const std::size_t> chosen) {
    FractionSet acc{Fraction{}};
    for (std::size_t s : chosen) acc = sumset_mod1(acc, sets[s]);
    best = std::max<std::uint64_t>(best, acc.size());
  });
  return best;
}

}  // namespace coverkit
