#pragma once

#include <coverkit/base.hpp>
#include <coverkit/fractions.hpp>

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace coverkit {

using IntVector = std::vector<std::int64_t>;
using ModVector = std::vector<Modulus>;

// The weighted class a + nZ^l, componentwise.
class MultiSequence {
 public:
  MultiSequence(IntVector residue, ModVector modulus, Rational weight = 1);

  const IntVector& residue() const { return residue_; }
  const ModVector& modulus() const { return modulus_; }
  const Rational& weight() const { return weight_; }
  std::size_t dimension() const { return modulus_.size(); }

  bool contains(std::span<const std::int64_t> x) const;

  friend bool operator==(const MultiSequence& a, const MultiSequence& b) {
    return a.residue_ == b.residue_ && a.modulus_ == b.modulus_ && a.weight_ == b.weight_;
  }

 private:
  IntVector residue_;
  ModVector modulus_;
  Rational weight_;
};

// d | y componentwise.
bool vec_divides(std::span<const Modulus> d, std::span<const std::int64_t> y);
bool vec_divides(std::span<const Modulus> d, std::span<const Modulus> y);

Rational multidim_value(std::span<const MultiSequence> seqs, std::span<const std::int64_t> x);

struct PeriodBoxVerdict {
  bool periodic = true;
  // x and y = x + n0_t e_t with w(x) != w(y).
  std::optional<std::pair<IntVector, IntVector>> counterexample;
};

// Exhaustive check of w(x) = w(x + n0_t e_t) over one period box. Throws
// CapExceeded ("box too large") above caps.box_points.
PeriodBoxVerdict is_periodic_mod_vec(std::span<const MultiSequence> seqs,
                                     std::span<const Modulus> n0, const Caps& caps = {});

struct ChainReport {
  bool applicable = false;
  std::vector<std::size_t> index_set;  // I(d), 0-based
  FractionSet theta;
  Integer index_count = 0;
  Integer theta_size = 0;
  Integer min_bound = 0;
  Integer least_prime = 0;
  bool verified = false;
};

// Evaluates |I(d)| >= |Theta| >= min-lcm bound >= p(d_1...d_l) when the
// hypotheses hold. Throws HypothesisError when w is not periodic mod n0.
ChainReport theorem_1_4_chain(std::span<const MultiSequence> seqs,
                                  std::span<const Modulus> n0, std::span<const Modulus> d,
                                  const Caps& caps = {});

// Periodic mod n0 iff every modulus divides n0, for nonzero weights and
// distinct maximal moduli. The answer is cross-checked against the box scan.
bool corollary_1_4_decide(std::span<const MultiSequence> seqs, std::span<const Modulus> n0,
                          const Caps& caps = {});

}  // namespace coverkit
