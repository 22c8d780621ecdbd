#include <coverkit/multidim.hpp>
#include <coverkit/numtheory.hpp>

#include <numeric>

namespace coverkit {

namespace {

std::size_t common_dimension(std::span<const MultiSequence> seqs, std::size_t l) {
  for (const auto& s : seqs) {
    if (s.dimension() != l) throw std::invalid_argument("mixed dimensions");
  }
  return l;
}

}  // namespace

MultiSequence::MultiSequence(IntVector residue, ModVector modulus, Rational weight)
    : residue_(std::move(residue)), modulus_(std::move(modulus)), weight_(std::move(weight)) {
  if (modulus_.empty()) throw std::invalid_argument("dimension must be positive");
  if (residue_.size() != modulus_.size()) {
    throw std::invalid_argument("residue and modulus dimensions differ");
  }
  for (std::size_t t = 0; t < modulus_.size(); ++t) {
    if (modulus_[t] == 0) throw std::invalid_argument("moduli components must be positive");
    residue_[t] = static_cast<std::int64_t>(mod_floor(residue_[t], modulus_[t]));
  }
  weight_.canonicalize();
}

bool MultiSequence::contains(std::span<const std::int64_t> x) const {
  for (std::size_t t = 0; t < modulus_.size(); ++t) {
    if (mod_floor(x[t], modulus_[t]) != static_cast<std::uint64_t>(residue_[t])) return false;
  }
  return true;
}

bool vec_divides(std::span<const Modulus> d, std::span<const std::int64_t> y) {
  if (d.size() != y.size()) throw std::invalid_argument("vec_divides: dimension mismatch");
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (mod_floor(y[t], d[t]) != 0) return false;
  }
  return true;
}

bool vec_divides(std::span<const Modulus> d, std::span<const Modulus> y) {
  if (d.size() != y.size()) throw std::invalid_argument("vec_divides: dimension mismatch");
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (y[t] % d[t] != 0) return false;
  }
  return true;
}

Rational multidim_value(std::span<const MultiSequence> seqs, std::span<const std::int64_t> x) {
  Rational total = 0;
  for (const auto& s : seqs) {
    if (s.dimension() != x.size()) throw std::invalid_argument("multidim_value: dimension mismatch");
    if (s.contains(x)) total += s.weight();
  }
  return total;
}

PeriodBoxVerdict is_periodic_mod_vec(std::span<const MultiSequence> seqs,
                                     std::span<const Modulus> n0, const Caps& caps) {
  const std::size_t l = common_dimension(seqs, n0.size());
  if (l == 0) throw std::invalid_argument("dimension must be positive");
  ModVector box(l);
  Integer points = 1;
  for (std::size_t t = 0; t < l; ++t) {
    if (n0[t] == 0) throw std::invalid_argument("n0 components must be positive");
    Modulus len = n0[t];
    for (const auto& s : seqs) len = std::lcm(len, s.modulus()[t]);
    box[t] = len;
    points *= static_cast<unsigned long>(len);
  }
  const std::uint64_t total = to_u64_capped(points, caps.box_points, "box too large: period box");

  // Row-major values of w over the box, last coordinate fastest.
  std::vector<std::uint64_t> stride(l);
  stride[l - 1] = 1;
  for (std::size_t t = l - 1; t-- > 0;) stride[t] = stride[t + 1] * box[t + 1];
  std::vector<Rational> values(total);
  for (const auto& s : seqs) {
    // Enumerate the points of the class inside the box.
    std::vector<std::uint64_t> cur(l);
    for (std::size_t t = 0; t < l; ++t) cur[t] = static_cast<std::uint64_t>(s.residue()[t]);
    bool done = false;
    while (!done) {
      std::uint64_t idx = 0;
      for (std::size_t t = 0; t < l; ++t) idx += cur[t] * stride[t];
      values[idx] += s.weight();
      for (std::size_t t = l;;) {
        if (t == 0) {
          done = true;
          break;
        }
        --t;
        cur[t] += s.modulus()[t];
        if (cur[t] < box[t]) break;
        cur[t] = static_cast<std::uint64_t>(s.residue()[t]);
      }
    }
  }

  PeriodBoxVerdict verdict;
  std::vector<std::uint64_t> x(l);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t t = 0; t < l; ++t) {
      x[t] = rest / stride[t];
      rest %= stride[t];
    }
    for (std::size_t t = 0; t < l; ++t) {
      const std::uint64_t shifted = (x[t] + n0[t]) % box[t];
      const std::uint64_t jdx = idx + (shifted - x[t]) * stride[t];
      if (values[idx] != values[jdx]) {
        IntVector a(x.begin(), x.end());
        IntVector b = a;
        b[t] += static_cast<std::int64_t>(n0[t]);
        verdict.periodic = false;
        verdict.counterexample.emplace(std::move(a), std::move(b));
        return verdict;
      }
    }
  }
  return verdict;
}

ChainReport theorem_1_4_chain(std::span<const MultiSequence> seqs,
                                  std::span<const Modulus> n0, std::span<const Modulus> d,
                                  const Caps& caps) {
  const std::size_t l = common_dimension(seqs, n0.size());
  if (d.size() != l) throw std::invalid_argument("d has the wrong dimension");
  for (Modulus dt : d) {
    if (dt == 0) throw std::invalid_argument("d components must be positive");
  }
  if (!is_periodic_mod_vec(seqs, n0, caps).periodic) {
    throw HypothesisError("w is not periodic modulo n0");
  }
  ChainReport report;
  if (vec_divides(d, n0)) return report;
  Rational density = 0;
  for (std::size_t s = 0; s < seqs.size(); ++s) {
    if (!vec_divides(d, std::span<const Modulus>(seqs[s].modulus()))) continue;
    report.index_set.push_back(s);
    Integer prod = 1;
    for (Modulus nt : seqs[s].modulus()) prod *= static_cast<unsigned long>(nt);
    density += seqs[s].weight() / Rational(prod);
  }
  if (report.index_set.empty() || sgn(density) == 0) return report;
  report.applicable = true;

  std::vector<Fraction> parts;
  for (std::size_t s : report.index_set) {
    Rational sum = 0;
    for (std::size_t t = 0; t < l; ++t) {
      sum += Rational(Integer(static_cast<long>(seqs[s].residue()[t])),
                      Integer(static_cast<unsigned long>(d[t])));
    }
    parts.emplace_back(sum);
  }
  report.theta = FractionSet(std::move(parts));

  // Index 0 is n0 itself, which d does not divide.
  auto lcm_bound = [&](std::span<const Modulus> n) {
    Integer acc = 1;
    for (std::size_t t = 0; t < l; ++t) {
      const Integer q(static_cast<unsigned long>(d[t] / std::gcd(d[t], n[t])));
      mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), q.get_mpz_t());
    }
    return acc;
  };
  Integer best = lcm_bound(n0);
  for (const auto& s : seqs) {
    const std::span<const Modulus> n(s.modulus());
    if (vec_divides(d, n)) continue;
    best = std::min(best, lcm_bound(n));
  }
  Integer prod_d = 1;
  for (Modulus dt : d) prod_d *= static_cast<unsigned long>(dt);

  report.index_count = static_cast<unsigned long>(report.index_set.size());
  report.theta_size = static_cast<unsigned long>(report.theta.size());
  report.min_bound = best;
  report.least_prime = least_prime_factor(prod_d);
  report.verified = report.index_count >= report.theta_size &&
                    report.theta_size >= report.min_bound &&
                    report.min_bound >= report.least_prime;
  return report;
}

bool corollary_1_4_decide(std::span<const MultiSequence> seqs, std::span<const Modulus> n0,
                          const Caps& caps) {
  common_dimension(seqs, n0.size());
  for (const auto& s : seqs) {
    if (sgn(s.weight()) == 0) throw HypothesisError("hypothesis not met: zero weight");
  }
  auto is_maximal = [&](std::size_t s) {
    for (const auto& r : seqs) {
      if (r.modulus() != seqs[s].modulus() &&
          vec_divides(std::span<const Modulus>(seqs[s].modulus()),
                      std::span<const Modulus>(r.modulus()))) {
        return false;
      }
    }
    return true;
  };
  for (std::size_t s = 0; s < seqs.size(); ++s) {
    if (!is_maximal(s)) continue;
    for (std::size_t r = s + 1; r < seqs.size(); ++r) {
      if (seqs[r].modulus() == seqs[s].modulus()) {
        throw HypothesisError("hypothesis not met: maximal modulus repeated");
      }
    }
  }
  bool decision = true;
  for (const auto& s : seqs) {
    decision = decision && vec_divides(std::span<const Modulus>(s.modulus()), n0);
  }
  if (is_periodic_mod_vec(seqs, n0, caps).periodic != decision) {
    throw InternalError("periodicity decision disagrees with the box scan");
  }
  return decision;
}

}  // namespace coverkit
