#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "agf/exact.hpp"

using namespace agf;

namespace {

long brute_force_derangements(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  long count = 0;
  do {
    bool fixed = false;
    for (int i = 0; i < n; ++i) fixed = fixed || p[static_cast<std::size_t>(i)] == i;
    count += !fixed;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST(Exact, FactorialsAndDoubleFactorials) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(factorial(25), BigInt("15511210043330985984000000"));
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(8), 384);
  EXPECT_THROW(factorial(-1), std::invalid_argument);
  EXPECT_THROW(double_factorial(-2), std::invalid_argument);
}

TEST(Exact, DerangementsMatchBruteForce) {
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(derangement(n), brute_force_derangements(n)) << "n=" << n;
}

TEST(Exact, Pochhammer) {
  EXPECT_EQ(pochhammer(BigRat(1, 2), 3), BigRat(15, 8));
  EXPECT_EQ(pochhammer(BigRat(1), 6), BigRat(720));
  EXPECT_EQ(pochhammer(BigRat(-2), 3), BigRat(0));
}

TEST(Exact, DualityFormsE) {
  EXPECT_EQ(duality_form_e(0), (LinearFormE{1, 0}));
  EXPECT_EQ(duality_form_e(1), (LinearFormE{2, 1}));
  EXPECT_EQ(duality_form_e(2), (LinearFormE{6, 2}));
  const auto rec = duality_forms_e_by_recurrence(100);
  for (long m = 0; m <= 100; ++m) {
    EXPECT_EQ(rec[static_cast<std::size_t>(m)].a, factorial(m + 1));
    EXPECT_EQ(rec[static_cast<std::size_t>(m)].b, derangement(m + 1));
  }
}

TEST(Exact, DualityFormsPi) {
  EXPECT_EQ(duality_form_pi(0), (LinearFormPi{1, 0}));
  EXPECT_EQ(duality_form_pi(1), (LinearFormPi{1, BigRat(1, 2)}));
  EXPECT_EQ(duality_form_pi(2), (LinearFormPi{2, BigRat(1, 2)}));
  EXPECT_EQ(duality_form_pi(3), (LinearFormPi{2, BigRat(3, 4)}));
  const auto rec = duality_forms_pi_by_recurrence(100);
  ASSERT_EQ(rec.size(), 101u);
  for (long m = 0; m <= 100; ++m) EXPECT_EQ(rec[static_cast<std::size_t>(m)], duality_form_pi_closed(m)) << "m=" << m;
}

TEST(Exact, DualityFormsShortTables) {
  EXPECT_EQ(duality_forms_pi_by_recurrence(0).size(), 1u);
  EXPECT_EQ(duality_forms_pi_by_recurrence(1).size(), 2u);
  EXPECT_EQ(duality_forms_e_by_recurrence(0).size(), 1u);
}

TEST(Exact, LinearFormValues) {
  const LinearFormE k1{2, 1};
  EXPECT_NEAR(k1.value<double>(), 2 - std::exp(1.0), 1e-15);
  const LinearFormPi p1{1, BigRat(1, 2)};
  EXPECT_NEAR(p1.value<double>(), 1 - M_PI / 2, 1e-15);
  EXPECT_NEAR(p1.magnitude<double>(), 1 + M_PI / 2, 1e-15);
}

TEST(Exact, BernoulliNumbers) {
  const auto b = bernoulli_numbers(12);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[1], BigRat(-1, 2));
  EXPECT_EQ(b[2], BigRat(1, 6));
  EXPECT_EQ(b[4], BigRat(-1, 30));
  EXPECT_EQ(b[12], BigRat(-691, 2730));
  for (int k = 3; k <= 11; k += 2) EXPECT_EQ(b[static_cast<std::size_t>(k)], 0);
}

TEST(Exact, FractionStrings) {
  EXPECT_EQ(to_fraction_string(BigRat(3, 4)), "3/4");
  EXPECT_EQ(to_fraction_string(BigRat(2)), "2/1");
  EXPECT_EQ(to_fraction_string(BigRat(-6, 8)), "-3/4");
  EXPECT_EQ(parse_fraction("-3/4"), BigRat(-3, 4));
  EXPECT_EQ(parse_fraction("12"), BigRat(12));
  EXPECT_THROW(parse_fraction("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_fraction("x/2"), std::invalid_argument);
}
