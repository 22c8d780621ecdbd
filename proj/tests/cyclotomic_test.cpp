#include <coverkit/cyclotomic.hpp>
#include <coverkit/numtheory.hpp>

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

namespace coverkit {
namespace {

using testing::Rng;
using testing::uniform;
using Element = CyclotomicElement;

// Floating-point evaluation used only as an independent reference in tests.
std::complex<double> numeric(const Element& e) {
  std::complex<double> z = 0;
  for (std::uint64_t j = 0; j < e.level(); ++j) {
    const double angle = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(e.level());
    z += e.coeffs()[j].get_d() * std::polar(1.0, angle);
  }
  return z;
}

Element random_element(Rng& rng, std::uint64_t level) {
  Element e(level);
  const auto terms = uniform(rng, 0, 4);
  for (std::int64_t i = 0; i < terms; ++i) {
    e.add_term(Rational(uniform(rng, -3, 3), uniform(rng, 1, 3)),
               uniform(rng, 0, static_cast<std::int64_t>(level) - 1));
  }
  return e;
}

TEST(RootPower, Examples) {
  EXPECT_EQ(Element::root_power(1, 5).as_rational(), Rational(1));
  EXPECT_EQ(Element::root_power(2, 1).as_rational(), Rational(-1));
  EXPECT_EQ(Element::root_power(4, 6).as_rational(), Rational(-1));
  EXPECT_EQ(Element::root_power(4, -1).coeffs()[3], 1);
  EXPECT_FALSE(Element::root_power(4, 1).as_rational().has_value());
}

TEST(RingOps, Examples) {
  Rng rng(3);
  const Element a = random_element(rng, 12);
  EXPECT_TRUE(equal_in_field(a + Element::zero(12), a));
  EXPECT_EQ((Element::root_power(3, 1) * Element::root_power(3, 2)).as_rational(), Rational(1));
  const Element one = Element::rational(4, 1);
  const Element z = Element::root_power(4, 1);
  EXPECT_EQ(((one + z) * (one - z)).as_rational(), Rational(2));
  EXPECT_EQ((z * Rational(1, 2) + z * Rational(1, 2) - z).is_zero(), true);
}

TEST(RingOps, LevelMismatchRejected) {
  EXPECT_THROW(Element::root_power(3, 1) + Element::root_power(4, 1), std::invalid_argument);
  EXPECT_THROW(Element::root_power(3, 1) * Element::root_power(6, 1), std::invalid_argument);
  EXPECT_THROW(Element::root_power(4, 1).lift(6), std::invalid_argument);
  // Lifting to the lcm makes them comparable: zeta_3 = zeta_6^2.
  EXPECT_TRUE(equal_in_field(Element::root_power(3, 1), Element::root_power(6, 2)));
  EXPECT_TRUE(equal_in_field(Element::root_power(4, 1) * Element::root_power(4, 1),
                             Element::root_power(6, 3)));
}

TEST(IsZero, Examples) {
  Element a(2);
  a.add_term(1, 0);
  a.add_term(1, 1);
  EXPECT_TRUE(a.is_zero());
  Element b(3);
  b.add_term(1, 0);
  b.add_term(1, 1);
  EXPECT_FALSE(b.is_zero());
  b.add_term(1, 2);
  EXPECT_TRUE(b.is_zero());
  // Nonzero coefficient vector that is zero in the field: sum of all 12th roots.
  Element c(12);
  for (int j = 0; j < 12; ++j) c.add_term(Rational(5, 7), j);
  EXPECT_TRUE(c.is_zero());
  // 1 + zeta_5 + ... but missing one term.
  Element d(5);
  for (int j = 0; j < 4; ++j) d.add_term(1, j);
  EXPECT_FALSE(d.is_zero());
  EXPECT_TRUE(equal_in_field(d, -Element::root_power(5, 4)));
}

TEST(IsZero, MatchesNumericEvaluation) {
  Rng rng(17);
  int zeros = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto n = static_cast<std::uint64_t>(uniform(rng, 1, 30));
    Element e = random_element(rng, n);
    // Bias toward zero elements by occasionally adding a full orbit sum.
    if (trial % 3 == 0) {
      const auto divisors = divisors_of(n);
      const std::uint64_t d = divisors[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(divisors.size()) - 1))];
      if (d > 1) {
        e = Element(n);
        const auto shift = uniform(rng, 0, static_cast<std::int64_t>(n));
        for (std::uint64_t r = 0; r < d; ++r) e.add_term(2, shift + static_cast<std::int64_t>(r * (n / d)));
      }
    }
    const bool exact = e.is_zero();
    zeros += exact ? 1 : 0;
    EXPECT_EQ(exact, std::abs(numeric(e)) < 1e-9) << e.to_string();
  }
  EXPECT_GT(zeros, 100);
}

TEST(RingOps, DistributiveAndSelfCancelling) {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::uint64_t>(uniform(rng, 1, 24));
    const Element a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
    EXPECT_TRUE(((a * (b + c)) - (a * b + a * c)).is_zero());
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_TRUE(equal_in_field(a * b, b * a));
    EXPECT_NEAR(std::abs(numeric(a * b) - numeric(a) * numeric(b)), 0.0, 1e-9);
  }
}

TEST(Reduced, HasTotientLength) {
  EXPECT_EQ(Element::root_power(12, 5).reduced().size(), 4u);
  EXPECT_EQ(Element::root_power(1, 0).reduced(), std::vector<Rational>{Rational(1)});
}

TEST(IndicatorSum, Examples) {
  EXPECT_TRUE(indicator_sum_check(12, 4, 8));
  EXPECT_TRUE(indicator_sum_check(12, 4, 5));
  EXPECT_TRUE(indicator_sum_check(1, 1, 0));
  EXPECT_THROW(indicator_sum_check(12, 5, 1), std::invalid_argument);
}

TEST(IndicatorSum, HoldsUniversally) {
  for (std::uint64_t level = 1; level <= 60; ++level) {
    for (std::uint64_t n : divisors_of(level)) {
      const auto bound = static_cast<std::int64_t>(2 * level);
      for (std::int64_t a = -bound; a <= bound; ++a) {
        ASSERT_TRUE(indicator_sum_check(level, n, a)) << level << " " << n << " " << a;
      }
    }
  }
}

TEST(ExpSum, Examples) {
  const std::vector<Element> zeros{Element(6), Element(6)};
  const std::vector<Fraction> alphas{Fraction(Integer(1), Integer(2)), Fraction(Integer(1), Integer(3))};
  EXPECT_TRUE(exp_sum_eval(zeros, alphas, 17, 6).is_zero());

  const std::vector<Element> one{Element::rational(1, 1)};
  const std::vector<Fraction> half{Fraction(Integer(1), Integer(2))};
  EXPECT_EQ(exp_sum_eval(one, half, 3, 2).as_rational(), Rational(-1));
  EXPECT_EQ(exp_sum_eval(one, half, -4, 2).as_rational(), Rational(1));
}

TEST(ExpSum, Preconditions) {
  const std::vector<Element> two{Element::rational(1, 1), Element::rational(1, 1)};
  const std::vector<Fraction> dup{Fraction(Integer(1), Integer(2)), Fraction(Integer(3), Integer(2))};
  EXPECT_THROW(exp_sum_eval(two, dup, 0, 2), std::invalid_argument);
  const std::vector<Fraction> bad_den{Fraction(Integer(1), Integer(2)), Fraction(Integer(1), Integer(3))};
  EXPECT_THROW(exp_sum_eval(two, bad_den, 0, 4), std::invalid_argument);
}

// Vanishing at n consecutive integers forces vanishing everywhere.
TEST(ExpSum, VandermondeVanishingProperty) {
  Rng rng(31);
  int vanishing = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto level = static_cast<std::uint64_t>(uniform(rng, 1, 12));
    const auto count = static_cast<std::size_t>(uniform(rng, 1, std::min<std::int64_t>(6, static_cast<std::int64_t>(level))));
    std::vector<std::uint64_t> pool(level);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Fraction> alphas;
    std::vector<Element> coeffs;
    const bool force_zero = trial % 4 == 0;
    for (std::size_t j = 0; j < count; ++j) {
      alphas.emplace_back(Integer(static_cast<unsigned long>(pool[j])), Integer(static_cast<unsigned long>(level)));
      coeffs.push_back(force_zero ? Element(level) : Element::rational(level, Rational(uniform(rng, -2, 2))));
    }
    const auto h = uniform(rng, -20, 20);
    bool zero_on_window = true;
    for (std::size_t i = 0; i < count; ++i) {
      zero_on_window = zero_on_window && exp_sum_eval(coeffs, alphas, h + static_cast<std::int64_t>(i), level).is_zero();
    }
    bool zero_on_period = true;
    for (std::uint64_t x = 0; x < level; ++x) {
      zero_on_period = zero_on_period && exp_sum_eval(coeffs, alphas, static_cast<std::int64_t>(x), level).is_zero();
    }
    if (zero_on_window) {
      ++vanishing;
      EXPECT_TRUE(zero_on_period);
      for (const auto& c : coeffs) EXPECT_TRUE(c.is_zero());
    }
  }
  EXPECT_GT(vanishing, 50);
}

}  // namespace
}  // namespace coverkit
