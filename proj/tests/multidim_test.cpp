#include <coverkit/covering.hpp>
#include <coverkit/multidim.hpp>
#include <coverkit/numtheory.hpp>

#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace coverkit {
namespace {

using testing::Rng;
using testing::uniform;

std::vector<MultiSequence> lift(const System& sys) {
  std::vector<MultiSequence> out;
  for (const auto& s : sys.seqs()) out.emplace_back(IntVector{s.residue()}, ModVector{s.modulus()}, s.weight());
  return out;
}

TEST(VecDivides, Examples) {
  EXPECT_TRUE(vec_divides(ModVector{1, 1, 1}, IntVector{5, -7, 0}));
  EXPECT_TRUE(vec_divides(ModVector{2, 3}, IntVector{4, 9}));
  EXPECT_FALSE(vec_divides(ModVector{2, 3}, IntVector{4, 8}));
  EXPECT_TRUE(vec_divides(ModVector{2, 3}, IntVector{-4, -9}));
  EXPECT_TRUE(vec_divides(ModVector{2, 3}, ModVector{4, 6}));
  EXPECT_THROW(vec_divides(ModVector{2}, IntVector{4, 6}), std::invalid_argument);
}

TEST(MultidimValue, Examples) {
  const std::vector<MultiSequence> one{{{1, 2}, {3, 5}, Rational(2, 3)}};
  EXPECT_EQ(multidim_value(one, IntVector{1, 2}), Rational(2, 3));
  EXPECT_EQ(multidim_value(one, IntVector{4, -3}), Rational(2, 3));
  EXPECT_EQ(multidim_value(one, IntVector{2, 2}), 0);
  const std::vector<MultiSequence> cancel{{{1, 1}, {2, 2}, Rational(5)}, {{1, 1}, {2, 2}, Rational(-5)}};
  for (std::int64_t x = -3; x <= 3; ++x) {
    for (std::int64_t y = -3; y <= 3; ++y) EXPECT_EQ(multidim_value(cancel, IntVector{x, y}), 0);
  }
  EXPECT_THROW(MultiSequence({1}, {2, 3}), std::invalid_argument);
  EXPECT_THROW(MultiSequence({1, 1}, {2, 0}), std::invalid_argument);
}

TEST(PeriodBox, Examples) {
  const std::vector<MultiSequence> seqs{{{0, 1}, {2, 3}}, {{1, 0}, {4, 1}, Rational(-1)}};
  EXPECT_TRUE(is_periodic_mod_vec(seqs, ModVector{4, 3}).periodic);
  EXPECT_TRUE(is_periodic_mod_vec(seqs, ModVector{8, 6}).periodic);

  const std::vector<MultiSequence> single{{{0, 0}, {2, 2}}};
  const auto v = is_periodic_mod_vec(single, ModVector{1, 1});
  ASSERT_FALSE(v.periodic);
  const auto& [x, y] = *v.counterexample;
  EXPECT_NE(multidim_value(single, x), multidim_value(single, y));
  EXPECT_EQ(y[0] - x[0] + y[1] - x[1], 1);
}

TEST(PeriodBox, CapEnforced) {
  Caps caps;
  caps.box_points = 100;
  const std::vector<MultiSequence> seqs{{{0, 0}, {11, 11}}};
  EXPECT_THROW(is_periodic_mod_vec(seqs, ModVector{1, 1}, caps), CapExceeded);
}

TEST(DimensionOne, AgreesWithCoveringModule) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const System sys = testing::random_weighted(rng, 5, 10);
    const auto seqs = lift(sys);
    for (std::int64_t x = -30; x <= 30; ++x) {
      ASSERT_EQ(multidim_value(seqs, IntVector{x}), cover_count(sys, x));
    }
    const auto period = least_period_thm13(sys);
    const auto n0 = static_cast<Modulus>(uniform(rng, 1, 30));
    const bool divisible = n0 % period.get_ui() == 0;
    EXPECT_EQ(is_periodic_mod_vec(seqs, ModVector{n0}).periodic, divisible) << trial;
  }
}

// Four (4,4) classes refining (0,0)(2,2), one class (1,1)(2,2) split along the
// second coordinate, and (1,0)(2,2): periodic modulo (2,2).
std::vector<MultiSequence> hand_instance() {
  return {{{0, 0}, {4, 4}}, {{0, 2}, {4, 4}}, {{2, 0}, {4, 4}}, {{2, 2}, {4, 4}},
          {{1, 1}, {2, 4}}, {{1, 3}, {2, 4}}, {{1, 0}, {2, 2}}};
}

TEST(DivisibilityChain, HandInstance) {
  const ModVector n0{2, 2}, d{4, 4};
  const auto r = theorem_1_4_chain(hand_instance(), n0, d);
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(r.index_set, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(r.index_count, 4);
  EXPECT_EQ(r.theta, (FractionSet{Fraction(Integer(0), Integer(1)), Fraction(Integer(1), Integer(2))}));
  EXPECT_EQ(r.theta_size, 2);
  EXPECT_EQ(r.min_bound, 2);
  EXPECT_EQ(r.least_prime, 2);
  EXPECT_TRUE(r.verified);
}

TEST(DivisibilityChain, NotApplicable) {
  const ModVector n0{2, 2};
  EXPECT_FALSE(theorem_1_4_chain(hand_instance(), n0, ModVector{2, 1}).applicable);
  EXPECT_FALSE(theorem_1_4_chain(hand_instance(), n0, ModVector{8, 1}).applicable);
  // Classes divisible by d whose weights cancel.
  const std::vector<MultiSequence> cancel{{{0, 0}, {4, 4}}, {{0, 0}, {4, 4}, -1}};
  EXPECT_FALSE(theorem_1_4_chain(cancel, ModVector{1, 1}, ModVector{4, 4}).applicable);
  const std::vector<MultiSequence> lone{{{0, 0}, {3, 3}}};
  EXPECT_THROW(theorem_1_4_chain(lone, ModVector{1, 1}, ModVector{3, 3}), HypothesisError);
  EXPECT_THROW(theorem_1_4_chain(hand_instance(), ModVector{1, 1}, ModVector{4, 4}), HypothesisError);
}

TEST(DivisibilityChain, ChainHoldsOnRandomInstances) {
  Rng rng(7);
  const std::vector<std::vector<Modulus>> pools{{1, 2, 4}, {1, 2, 3, 6}, {1, 3}, {1, 5}, {1, 2, 4, 3, 6}};
  int applicable = 0, by_dim[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 3000 && applicable < 300; ++trial) {
    const auto l = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto& pool = pools[static_cast<std::size_t>(uniform(rng, 0, l == 3 ? 2 : 4))];
    const auto inst = testing::refined_instance(rng, l, pool);
    ASSERT_TRUE(is_periodic_mod_vec(inst.seqs, inst.n0).periodic);
    for (int attempt = 0; attempt < 3; ++attempt) {
      ModVector d = inst.fine[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(inst.fine.size()) - 1))];
      if (attempt == 2) {
        for (auto& dt : d) dt = std::gcd(dt * static_cast<Modulus>(uniform(rng, 1, 2)), Modulus{12});
      }
      const auto r = theorem_1_4_chain(inst.seqs, inst.n0, d);
      if (!r.applicable) continue;
      ++applicable;
      ++by_dim[l];
      ASSERT_TRUE(r.verified) << "trial " << trial << " |I|=" << r.index_count << " |Theta|=" << r.theta_size
                              << " bound=" << r.min_bound << " p=" << r.least_prime;
      EXPECT_GE(r.index_count, r.theta_size);
      EXPECT_GE(r.theta_size, r.min_bound);
      EXPECT_GE(r.min_bound, r.least_prime);
    }
  }
  EXPECT_GE(applicable, 200);
  EXPECT_GT(by_dim[1], 0);
  EXPECT_GT(by_dim[2], 0);
  EXPECT_GT(by_dim[3], 0);
}

TEST(PeriodicityDecision, Examples) {
  const std::vector<MultiSequence> seqs{{{0, 1}, {2, 3}}, {{1, 0}, {4, 1}, Rational(-1)}};
  EXPECT_TRUE(corollary_1_4_decide(seqs, ModVector{4, 3}));
  const std::vector<MultiSequence> single{{{1, 1}, {2, 3}, 3}};
  EXPECT_FALSE(corollary_1_4_decide(single, ModVector{2, 1}));
  EXPECT_FALSE(is_periodic_mod_vec(single, ModVector{2, 1}).periodic);
  // Hand instance repeats the maximal modulus (4,4).
  EXPECT_THROW(corollary_1_4_decide(hand_instance(), ModVector{2, 2}), HypothesisError);
  const std::vector<MultiSequence> zero{{{0, 0}, {2, 2}, 0}};
  EXPECT_THROW(corollary_1_4_decide(zero, ModVector{1, 1}), HypothesisError);
}

TEST(PeriodicityDecision, MatchesBoxScan) {
  Rng rng(11);
  int tested = 0, periodic = 0;
  for (int trial = 0; trial < 5000 && tested < 100; ++trial) {
    const auto l = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto k = uniform(rng, 1, 4);
    std::vector<MultiSequence> seqs;
    for (std::int64_t s = 0; s < k; ++s) seqs.push_back(testing::random_multiseq(rng, l, l == 3 ? 4 : 6));
    ModVector n0(l);
    const bool from_lcm = uniform(rng, 0, 2) == 0;
    for (std::size_t t = 0; t < l; ++t) {
      n0[t] = static_cast<Modulus>(uniform(rng, 1, 6));
      if (from_lcm) {
        for (const auto& s : seqs) n0[t] = std::lcm(n0[t], s.modulus()[t]);
      }
    }
    bool decision;
    try {
      decision = corollary_1_4_decide(seqs, n0);
    } catch (const HypothesisError&) {
      continue;
    }
    ++tested;
    periodic += decision ? 1 : 0;
    EXPECT_EQ(decision, is_periodic_mod_vec(seqs, n0).periodic);
  }
  EXPECT_EQ(tested, 100);
  EXPECT_GT(periodic, 10);
  EXPECT_LT(periodic, 90);
}

}  // namespace
}  // namespace coverkit
