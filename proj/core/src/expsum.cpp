#include <coverkit/expsum.hpp>
#include <coverkit/numtheory.hpp>

#include <numeric>

namespace coverkit {

bool ExpSequence::contains(std::int64_t x) const {
  std::uint64_t level = modulus;
  for (const auto& term : terms) level = std::lcm(level, term.coeff.level());
  const std::uint64_t step = level / modulus;
  const std::uint64_t xr = mod_floor(x, modulus);
  CyclotomicElement sum(level);
  for (const auto& term : terms) {
    const auto tr = static_cast<unsigned __int128>(mod_floor(term.t, modulus));
    const auto e = static_cast<std::uint64_t>((tr * xr) % modulus) * step;
    const CyclotomicElement c = term.coeff.lift(level);
    for (std::uint64_t j = 0; j < level; ++j) {
      if (sgn(c.coeffs()[j]) == 0) continue;
      sum.add_term(c.coeffs()[j], static_cast<std::int64_t>((j + e) % level));
    }
  }
  return sum.is_zero();
}

FractionSet ExpSequence::frequencies() const {
  std::vector<Fraction> out;
  const Integer den(static_cast<unsigned long>(modulus));
  for (const auto& term : terms) out.emplace_back(Integer(static_cast<long>(term.t)), den);
  return FractionSet(std::move(out));
}

ExpSequence arithmetic_exp_sequence(std::int64_t a, Modulus n, std::int64_t m) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  if (std::gcd(mod_floor(m, n), n) != 1) {
    throw HypothesisError("multiplier " + std::to_string(m) + " is not coprime to " +
                          std::to_string(n));
  }
  // exp(-2 pi i a m / n) = zeta_n^(-a m)
  const auto am = static_cast<unsigned __int128>(mod_floor(a, n)) * mod_floor(m, n);
  const auto e = static_cast<std::int64_t>(n - static_cast<std::uint64_t>(am % n));
  ExpSequence seq{n, {}};
  seq.terms.push_back({0, CyclotomicElement::rational(n, 1)});
  seq.terms.push_back({m, -CyclotomicElement::root_power(n, e)});
  return seq;
}

}  // namespace coverkit
