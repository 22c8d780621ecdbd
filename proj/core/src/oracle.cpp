#include <coverkit/numtheory.hpp>
#include <coverkit/oracle.hpp>

#include <algorithm>
#include <limits>

namespace coverkit {
inline namespace oracle {

namespace {

bool all_small_integers(std::span<const PeriodicValueTable> tables) {
  constexpr long kLimit = 1L << 40;
  for (const auto& t : tables) {
    for (const auto& v : t.values()) {
      if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return false;
      const long n = v.get_num().get_si();
      if (n > kLimit || n < -kLimit) return false;
    }
  }
  return true;
}

}  // namespace

ScanVerdict brute_cover_verdict(const System& system, const PeriodicValueTable& target,
                                const Caps& caps, bool exhaustive) {
  auto moduli = system.moduli();
  moduli.push_back(target.period());
  const std::uint64_t n =
      to_u64_capped(lcm_all(moduli), caps.period_points, "period too large: oracle period");
  const Field& field = target.field();
  const bool integral = system.unweighted();
  ScanVerdict v;
  v.window_length = n;
  Rational w;
  for (std::uint64_t x = 0; x < n; ++x) {
    const auto xi = static_cast<std::int64_t>(x);
    bool equal;
    if (integral) {
      long hits = 0;
      for (const auto& s : system.seqs()) hits += s.contains(xi) ? 1 : 0;
      equal = field.is_prime() ? field.normalize(Rational(hits)) == target.at(xi)
                               : cmp(target.at(xi), hits) == 0;
    } else {
      w = 0;
      for (const auto& s : system.seqs()) {
        if (s.contains(xi)) w += s.weight();
      }
      equal = field.normalize(w) == target.at(xi);
    }
    ++v.points_examined;
    if (!equal && v.holds) {
      v.holds = false;
      v.witness = xi;
      if (!exhaustive) break;
    }
  }
  return v;
}

std::uint64_t brute_least_period(const PeriodicValueTable& table) {
  const auto& vals = table.values();
  const std::uint64_t n = vals.size();
  for (std::uint64_t d : divisors_of(n)) {
    bool periodic = true;
    for (std::uint64_t x = 0; x < n && periodic; ++x) {
      periodic = vals[x] == vals[(x + d) % n];
    }
    if (periodic) return d;
  }
  return n;
}

ScanVerdict brute_zero_sum(std::span<const PeriodicValueTable> psis, const Caps& caps) {
  if (psis.empty()) throw std::invalid_argument("brute_zero_sum: no maps given");
  std::vector<Modulus> periods;
  for (const auto& t : psis) {
    if (!(t.field() == psis.front().field())) {
      throw std::invalid_argument("brute_zero_sum: maps over different fields");
    }
    periods.push_back(t.period());
  }
  const Field field = psis.front().field();
  const std::uint64_t n =
      to_u64_capped(lcm_all(periods), caps.period_points, "period too large: oracle period");
  ScanVerdict v;
  v.window_length = n;
  if (all_small_integers(psis)) {
    std::vector<std::vector<long>> tables;
    for (const auto& t : psis) {
      std::vector<long> row;
      for (const auto& val : t.values()) row.push_back(val.get_num().get_si());
      tables.push_back(std::move(row));
    }
    const long p = static_cast<long>(field.characteristic);
    for (std::uint64_t x = 0; x < n; ++x) {
      long sum = 0;
      for (const auto& row : tables) sum += row[x % row.size()];
      ++v.points_examined;
      if (p != 0 ? sum % p != 0 : sum != 0) {
        v.holds = false;
        v.witness = static_cast<std::int64_t>(x);
        break;
      }
    }
    return v;
  }
  Rational sum;
  for (std::uint64_t x = 0; x < n; ++x) {
    sum = 0;
    for (const auto& t : psis) sum += t.values()[x % t.period()];
    ++v.points_examined;
    if (sgn(field.normalize(sum)) != 0) {
      v.holds = false;
      v.witness = static_cast<std::int64_t>(x);
      break;
    }
  }
  return v;
}

ScanVerdict brute_expsum_cover(std::span<const ExpSequence> seqs, std::uint64_t m,
                               const Caps& caps) {
  if (seqs.empty()) throw std::invalid_argument("brute_expsum_cover: no sets given");
  std::vector<Modulus> moduli;
  for (const auto& s : seqs) moduli.push_back(s.modulus);
  const std::uint64_t n =
      to_u64_capped(lcm_all(moduli), caps.period_points, "period too large: oracle period");
  // X_s is periodic mod n_s, so membership is tabulated once per residue.
  std::vector<std::vector<char>> member;
  for (const auto& s : seqs) {
    std::vector<char> row(s.modulus);
    for (Modulus r = 0; r < s.modulus; ++r) row[r] = s.contains(static_cast<std::int64_t>(r));
    member.push_back(std::move(row));
  }
  ScanVerdict v;
  v.window_length = n;
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t hits = 0;
    for (const auto& row : member) hits += row[x % row.size()] ? 1 : 0;
    ++v.points_examined;
    if (hits < m) {
      v.holds = false;
      v.witness = static_cast<std::int64_t>(x);
      break;
    }
  }
  return v;
}

}  // namespace oracle
}  // namespace coverkit
