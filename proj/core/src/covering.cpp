#include <coverkit/covering.hpp>
#include <coverkit/numtheory.hpp>

#include <algorithm>
#include <numeric>

namespace coverkit {

namespace {

std::int64_t window_point(std::int64_t start, std::uint64_t offset) {
  const __int128 x = static_cast<__int128>(start) + offset;
  if (x > INT64_MAX) throw std::out_of_range("window extends past the int64 range");
  return static_cast<std::int64_t>(x);
}

void require_unweighted(const System& system, const char* op) {
  if (!system.unweighted()) {
    throw HypothesisError(std::string(op) + " requires an unweighted system (all weights 1)");
  }
}

// Indicator of a(n) as a period-n table.
PeriodicValueTable indicator_table(const WeightedSequence& s, Field field) {
  std::vector<Rational> vals(s.modulus());
  vals[static_cast<std::size_t>(s.residue())] = 1;
  return PeriodicValueTable(field, std::move(vals));
}

}  // namespace

ScanVerdict theorem_1_1_window(std::span<const PeriodicValueTable> psis, std::int64_t start,
                               const WindowOptions& opts) {
  if (psis.empty()) throw std::invalid_argument("theorem_1_1_window: no maps given");
  const Field field = psis.front().field();
  std::vector<Modulus> periods;
  for (const auto& psi : psis) {
    if (!(psi.field() == field)) {
      throw std::invalid_argument("theorem_1_1_window: maps over different fields");
    }
    if (field.is_prime() && psi.period() % field.characteristic == 0 && !opts.exploratory) {
      throw HypothesisError("characteristic divides period: p = " +
                            std::to_string(field.characteristic) + " divides " +
                            std::to_string(psi.period()));
    }
    periods.push_back(psi.period());
  }
  ScanVerdict v;
  v.window_length = to_u64_capped(phi_sum_cardinality(periods), opts.caps.period_points,
                                  "window too large");
  Rational sum;
  for (std::uint64_t i = 0; i < v.window_length; ++i) {
    const std::int64_t x = window_point(start, i);
    sum = 0;
    for (const auto& psi : psis) sum += psi.at(x);
    ++v.points_examined;
    if (sgn(field.normalize(sum)) != 0 && v.holds) {
      v.holds = false;
      v.witness = x;
      if (!opts.exhaustive) break;
    }
  }
  if (v.holds && opts.cross_check && !opts.exploratory) {
    const ScanVerdict full = brute_zero_sum(psis, opts.caps);
    if (!full.holds) {
      throw InternalError("window certified a zero sum but the oracle found x = " +
                          std::to_string(*full.witness));
    }
  }
  return v;
}

ScanVerdict verify_target_function(const System& system, const PeriodicValueTable& target,
                                   std::int64_t start, const WindowOptions& opts) {
  require_unweighted(system, "verify_target_function");
  // w_A - target = sum of indicator maps plus (-target): a zero-sum instance.
  std::vector<PeriodicValueTable> psis;
  psis.reserve(system.size() + 1);
  std::vector<Rational> neg;
  neg.reserve(target.period());
  for (const auto& v : target.values()) neg.push_back(-v);
  psis.emplace_back(target.field(), std::move(neg));
  for (const auto& s : system.seqs()) psis.push_back(indicator_table(s, target.field()));
  WindowOptions inner = opts;
  inner.cross_check = false;
  ScanVerdict v = theorem_1_1_window(psis, start, inner);
  if (opts.cross_check && !opts.exploratory) {
    const ScanVerdict full = brute_cover_verdict(system, target, opts.caps);
    if (full.holds != v.holds) {
      throw InternalError("window verdict disagrees with the full-period oracle");
    }
  }
  return v;
}

bool is_exact_m_cover(const System& system, std::int64_t m, const WindowOptions& opts) {
  require_unweighted(system, "is_exact_m_cover");
  return verify_target_function(system, PeriodicValueTable::constant(Rational(m)), 0, opts)
      .holds;
}

std::int64_t corollary_1_2_witness(const System& system, std::int64_t m) {
  require_unweighted(system, "corollary_1_2_witness");
  const Integer k(static_cast<unsigned long>(system.size()));
  const Integer bound = k - f_additive(system.period());
  if (Integer(static_cast<long>(m)) <= bound) {
    throw HypothesisError("hypothesis not met: m = " + std::to_string(m) +
                          " must exceed k - f(N) = " + bound.get_str());
  }
  const auto moduli = system.moduli();
  const std::uint64_t window =
      to_u64_capped(phi_sum_cardinality(moduli), Caps{}.period_points, "window too large");
  for (std::uint64_t x = 0; x < window; ++x) {
    const auto xi = static_cast<std::int64_t>(x);
    if (cover_count(system, xi) != m) return xi;
  }
  throw InternalError("no witness with w(x) != m in [0, |S|)");
}

ScanVerdict theorem_1_2_window_cover(std::span<const ExpSequence> seqs, std::uint64_t m,
                                     std::int64_t start, const WindowOptions& opts) {
  const std::size_t k = seqs.size();
  if (m < 1 || m > k) {
    throw HypothesisError("theorem_1_2_window_cover: m must lie in [1, k]");
  }
  std::vector<FractionSet> freq;
  freq.reserve(k);
  for (const auto& s : seqs) freq.push_back(s.frequencies());
  ScanVerdict v;
  v.window_length = window_bound_W(freq, m, opts.caps.max_subset_k);
  for (std::uint64_t i = 0; i < v.window_length; ++i) {
    const std::int64_t x = window_point(start, i);
    std::uint64_t hits = 0;
    for (const auto& s : seqs) hits += s.contains(x) ? 1 : 0;
    ++v.points_examined;
    if (hits < m && v.holds) {
      v.holds = false;
      v.witness = x;
      if (!opts.exhaustive) break;
    }
  }
  if (v.holds && opts.cross_check) {
    const ScanVerdict full = brute_expsum_cover(seqs, m, opts.caps);
    if (!full.holds) {
      throw InternalError("window certified an m-cover but the oracle found x = " +
                          std::to_string(*full.witness));
    }
  }
  return v;
}

MinWindowReport corollary_1_3_min_window(const System& system,
                                         std::span<const std::int64_t> multipliers,
                                         std::uint64_t l, std::int64_t start,
                                         const Caps& caps) {
  require_unweighted(system, "corollary_1_3_min_window");
  const auto& seqs = system.seqs();
  const std::size_t k = seqs.size();
  if (multipliers.size() != k) {
    throw std::invalid_argument("one multiplier per sequence is required");
  }
  std::vector<Fraction> terms;
  for (std::size_t s = 0; s < k; ++s) {
    const Modulus n = seqs[s].modulus();
    if (std::gcd(mod_floor(multipliers[s], n), n) != 1) {
      throw HypothesisError("multiplier " + std::to_string(multipliers[s]) +
                            " is not coprime to modulus " + std::to_string(n));
    }
    terms.emplace_back(Integer(static_cast<long>(multipliers[s])),
                       Integer(static_cast<unsigned long>(n)));
  }
  const PeriodicValueTable table = cover_table(system, caps);
  const Rational global_min = *std::min_element(table.values().begin(), table.values().end());
  if (cmp(global_min, static_cast<unsigned long>(l)) < 0) {
    throw HypothesisError("l = " + std::to_string(l) + " exceeds min w_A = " +
                          to_string(global_min));
  }
  if (k > caps.max_subset_k) {
    throw CapExceeded("too many subsets: k = " + std::to_string(k));
  }
  std::uint64_t window = 0;
  for_each_combination(k, k - l, [&](std::span<const std::size_t> chosen) {
    std::vector<Fraction> picked;
    for (std::size_t s : chosen) picked.push_back(terms[s]);
    window = std::max<std::uint64_t>(window, subset_sum_set(picked).size());
  });
  Rational window_min = cover_count(system, start);
  for (std::uint64_t i = 1; i < window; ++i) {
    window_min = std::min(window_min, cover_count(system, window_point(start, i)));
  }
  if (window_min != global_min) {
    throw InternalError("window minimum " + to_string(window_min) +
                        " differs from the global minimum " + to_string(global_min));
  }
  return {window, window_min, global_min};
}

std::vector<AlphaCoefficient> fourier_coefficients(const System& system) {
  const auto moduli = system.moduli();
  const FractionSet alphas = multiples_set(moduli);
  std::vector<AlphaCoefficient> out;
  out.reserve(alphas.size());
  for (const Fraction& alpha : alphas) {
    const std::uint64_t d = alpha.den().get_ui();
    const std::uint64_t j = alpha.num().get_ui();
    CyclotomicElement c(d);
    for (const auto& s : system.seqs()) {
      if (s.modulus() % d != 0) continue;
      // exp(2 pi i (j/d) a) = zeta_d^(j a)
      const auto e = static_cast<std::int64_t>(
          (static_cast<unsigned __int128>(j) * static_cast<std::uint64_t>(s.residue())) % d);
      c.add_term(s.weight() / Rational(static_cast<unsigned long>(s.modulus())), e);
    }
    out.push_back({alpha, std::move(c)});
  }
  return out;
}

Integer least_period_thm13(const System& system) {
  Integer period = 1;
  for (const auto& [alpha, c] : fourier_coefficients(system)) {
    if (c.is_zero()) continue;
    const Integer d = alpha.den();
    mpz_lcm(period.get_mpz_t(), period.get_mpz_t(), d.get_mpz_t());
  }
  return period;
}

bool weighted_average_check(const System& system, const Caps& caps) {
  const PeriodicValueTable table = cover_table(system, caps);
  Rational total = 0;
  for (const auto& v : table.values()) total += v;
  const Rational mean = total / Rational(static_cast<unsigned long>(table.period()));
  Rational expected = 0;
  for (const auto& s : system.seqs()) {
    expected += s.weight() / Rational(static_cast<unsigned long>(s.modulus()));
  }
  return mean == expected;
}

std::vector<AlphaCoefficient> zero_system_coefficients(const System& system, const Caps& caps) {
  const PeriodicValueTable table = cover_table(system, caps);
  for (std::uint64_t x = 0; x < table.period(); ++x) {
    if (sgn(table.values()[x]) != 0) {
      throw HypothesisError("covering function is not identically zero (w(" +
                            std::to_string(x) + ") = " + to_string(table.values()[x]) + ")");
    }
  }
  auto coeffs = fourier_coefficients(system);
  for (const auto& [alpha, c] : coeffs) {
    if (!c.is_zero()) {
      throw InternalError("nonzero coefficient at alpha = " + alpha.to_string() +
                          " for a zero system");
    }
  }
  return coeffs;
}

bool su6_superset_check(const System& system, const Caps& caps) {
  require_unweighted(system, "su6_superset_check");
  const PeriodicValueTable table = cover_table(system, caps);
  const auto& vals = table.values();
  if (std::adjacent_find(vals.begin(), vals.end(), std::not_equal_to<>()) != vals.end()) {
    throw HypothesisError("system does not cover all integers the same number of times");
  }
  std::vector<Fraction> reciprocals;
  for (Modulus n : system.moduli()) {
    reciprocals.emplace_back(Integer(1), Integer(static_cast<unsigned long>(n)));
  }
  const auto moduli = system.moduli();
  return subset_sum_set(reciprocals).includes(multiples_set(moduli));
}

}  // namespace coverkit
