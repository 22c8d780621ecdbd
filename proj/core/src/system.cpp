#include <coverkit/numtheory.hpp>
#include <coverkit/system.hpp>

namespace coverkit {

WeightedSequence::WeightedSequence(std::int64_t residue, Modulus modulus, Rational weight)
    : input_residue_(residue), residue_(0), modulus_(modulus), weight_(std::move(weight)) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  if (modulus > static_cast<Modulus>(INT64_MAX)) {
    throw std::invalid_argument("modulus exceeds the supported range");
  }
  weight_.canonicalize();
  residue_ = static_cast<std::int64_t>(mod_floor(residue, modulus));
}

bool WeightedSequence::contains(std::int64_t x) const {
  return mod_floor(x, modulus_) == static_cast<std::uint64_t>(residue_);
}

System::System(std::vector<WeightedSequence> seqs) : seqs_(std::move(seqs)) {
  if (seqs_.empty()) throw std::invalid_argument("a system needs at least one sequence");
}

std::vector<Modulus> System::moduli() const {
  std::vector<Modulus> out;
  out.reserve(seqs_.size());
  for (const auto& s : seqs_) out.push_back(s.modulus());
  return out;
}

Integer System::period() const {
  const auto ms = moduli();
  return lcm_all(ms);
}

bool System::unweighted() const {
  for (const auto& s : seqs_) {
    if (s.weight() != 1) return false;
  }
  return true;
}

System System::with(const WeightedSequence& extra) const {
  auto seqs = seqs_;
  seqs.push_back(extra);
  return System(std::move(seqs));
}

Field Field::prime(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("field characteristic must be a prime");
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("field characteristic must be a prime");
  }
  return Field{p};
}

Rational Field::normalize(const Rational& v) const {
  if (!is_prime()) return v;
  if (v.get_den() != 1) {
    throw std::invalid_argument("values over F_p must be integers");
  }
  Integer r;
  const Integer p(static_cast<unsigned long>(characteristic));
  mpz_fdiv_r(r.get_mpz_t(), v.get_num_mpz_t(), p.get_mpz_t());
  return Rational(r);
}

PeriodicValueTable::PeriodicValueTable(Field field, std::vector<Rational> values)
    : field_(field), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("a value table needs a positive period");
  for (auto& v : values_) {
    v.canonicalize();
    v = field_.normalize(v);
  }
}

PeriodicValueTable PeriodicValueTable::constant(const Rational& c, Field field) {
  return PeriodicValueTable(field, {c});
}

const Rational& PeriodicValueTable::at(std::int64_t x) const {
  return values_[mod_floor(x, values_.size())];
}

Rational cover_count(const System& system, std::int64_t x) {
  Rational total = 0;
  for (const auto& s : system.seqs()) {
    if (s.contains(x)) total += s.weight();
  }
  return total;
}

PeriodicValueTable cover_table(const System& system, const Caps& caps) {
  const std::uint64_t n = to_u64_capped(system.period(), caps.period_points,
                                        "period too large: lcm of moduli");
  std::vector<Rational> values(n);
  for (const auto& s : system.seqs()) {
    for (std::uint64_t x = static_cast<std::uint64_t>(s.residue()); x < n; x += s.modulus()) {
      values[x] += s.weight();
    }
  }
  return PeriodicValueTable(Field::rationals(), std::move(values));
}

}  // namespace coverkit
