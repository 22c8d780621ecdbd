#pragma once

#include <coverkit/base.hpp>

#include <span>
#include <string>
#include <vector>

namespace coverkit {

// The residue class a(n) = a + nZ carrying a rational weight.
class WeightedSequence {
 public:
  WeightedSequence(std::int64_t residue, Modulus modulus, Rational weight = 1);

  // Canonical residue, 0 <= a < n.
  std::int64_t residue() const { return residue_; }
  // The residue as given before canonicalization.
  std::int64_t input_residue() const { return input_residue_; }
  Modulus modulus() const { return modulus_; }
  const Rational& weight() const { return weight_; }

  bool contains(std::int64_t x) const;

  friend bool operator==(const WeightedSequence& a, const WeightedSequence& b) {
    return a.residue_ == b.residue_ && a.modulus_ == b.modulus_ && a.weight_ == b.weight_;
  }

 private:
  std::int64_t input_residue_;
  std::int64_t residue_;
  Modulus modulus_;
  Rational weight_;
};

// A finite nonempty system of weighted arithmetic sequences.
class System {
 public:
  explicit System(std::vector<WeightedSequence> seqs);

  const std::vector<WeightedSequence>& seqs() const { return seqs_; }
  std::size_t size() const { return seqs_.size(); }
  std::vector<Modulus> moduli() const;
  // lcm of the moduli; unbounded.
  Integer period() const;
  bool unweighted() const;

  System with(const WeightedSequence& extra) const;

  friend bool operator==(const System&, const System&) = default;

 private:
  std::vector<WeightedSequence> seqs_;
};

// Q (characteristic 0) or the prime field F_p.
struct Field {
  std::uint64_t characteristic = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint64_t p);

  bool is_prime() const { return characteristic != 0; }
  // Canonical representative: identity over Q, least nonnegative residue mod p.
  Rational normalize(const Rational& v) const;

  friend bool operator==(const Field&, const Field&) = default;
};

// A map Z -> F with period n, given by its values on 0..n-1.
class PeriodicValueTable {
 public:
  PeriodicValueTable(Field field, std::vector<Rational> values);
  static PeriodicValueTable constant(const Rational& c, Field field = Field::rationals());

  const Field& field() const { return field_; }
  std::uint64_t period() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(std::int64_t x) const;

  friend bool operator==(const PeriodicValueTable&, const PeriodicValueTable&) = default;

 private:
  Field field_;
  std::vector<Rational> values_;
};

// w(x) = sum of weights of the sequences containing x.
Rational cover_count(const System& system, std::int64_t x);

// cover_count over one full period [n_1, ..., n_k]. Throws CapExceeded
// ("period too large") above caps.period_points.
PeriodicValueTable cover_table(const System& system, const Caps& caps = {});

}  // namespace coverkit
