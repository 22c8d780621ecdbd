#pragma once

#include <coverkit/base.hpp>

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace coverkit {

// A reduced rational in [0, 1). Construction takes the fractional part.
class Fraction {
 public:
  Fraction() = default;
  Fraction(const Integer& num, const Integer& den);
  explicit Fraction(const Rational& q);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const Rational& value() const { return value_; }

  // {a + b}
  friend Fraction operator+(const Fraction& a, const Fraction& b);

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;

 private:
  Rational value_{0};
};

// Sorted, duplicate-free set of fractions. Ordering makes output diff-stable.
class FractionSet {
 public:
  FractionSet() = default;
  explicit FractionSet(std::vector<Fraction> elems);
  FractionSet(std::initializer_list<Fraction> elems);

  const std::vector<Fraction>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const Fraction& f) const;
  bool includes(const FractionSet& other) const;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const FractionSet&, const FractionSet&) = default;

  std::string to_string() const;

 private:
  std::vector<Fraction> elems_;
};

// S = union over s of {r/n_s : 0 <= r < n_s}.
FractionSet multiples_set(std::span<const Modulus> moduli);

// Sum of phi(d) over the union of the divisor sets; equals |multiples_set|.
Integer phi_sum_cardinality(std::span<const Modulus> moduli);

FractionSet sumset_mod1(const FractionSet& a, const FractionSet& b);

// Fractional parts of all subset sums of `terms`.
FractionSet subset_sum_set(std::span<const Fraction> terms);

// Max over I with |I| = k - m + 1 of the size of the mod-1 sumset of the
// chosen sets. Throws HypothesisError for m outside [1, k] and CapExceeded
// when k exceeds `max_k`.
std::uint64_t window_bound_W(std::span<const FractionSet> sets, std::uint64_t m,
                             std::size_t max_k = Caps{}.max_subset_k);

// Calls `visit` with every size-`r` subset of {0, ..., k-1}, ascending.
template <class Visit>
void for_each_combination(std::size_t k, std::size_t r, Visit&& visit) {
  if (r > k) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    visit(std::span<const std::size_t>(idx));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == k - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace coverkit
