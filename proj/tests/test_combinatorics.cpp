#include <chrono>

#include <gtest/gtest.h>

#include "goldbachkit/combinatorics.hpp"

using namespace gbk;

namespace {

ExactInt bin(unsigned long n, unsigned long r) {
  ExactInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

ExactInt fact(unsigned long n) {
  ExactInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace

TEST(Combinatorics, BinomialMatchesGmp) {
  for (long n = 0; n <= 60; ++n) {
    for (long r = 0; r <= n; ++r) ASSERT_EQ(binomial(n, r), bin(n, r));
  }
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
}

TEST(Combinatorics, FkiExamples) {
  EXPECT_EQ(f_ki(2, 2), 2);
  EXPECT_EQ(f_ki(3, 1), 0);
  EXPECT_EQ(f_ki(3, 3), 6);
  EXPECT_EQ(f_ki(3, 2), 0);
  EXPECT_EQ(f_ki(2, 1), 0);
  EXPECT_EQ(f_ki(1, 1), 1);
}

TEST(Combinatorics, FkiVanishingAndFactorial) {
  for (long k = 1; k <= 25; ++k) {
    for (long i = 1; i < k; ++i) ASSERT_EQ(f_ki(k, i), 0) << "k=" << k << " i=" << i;
    ASSERT_EQ(f_ki(k, k), fact(static_cast<unsigned long>(k)));
  }
}

TEST(Combinatorics, Recurrence) {
  EXPECT_TRUE(verify_fki_recurrence(3, 3));
  EXPECT_TRUE(verify_fki_recurrence(5, 4));
  EXPECT_TRUE(verify_fki_recurrence(2, 2));
  for (long k = 2; k <= 25; ++k) {
    for (long i = 2; i <= 25; ++i) ASSERT_TRUE(verify_fki_recurrence(k, i));
  }
}

TEST(Combinatorics, SolveAkExamples) {
  const auto a1 = solve_ak(1);
  ASSERT_EQ(a1.size(), 2u);
  EXPECT_EQ(a1[0], -1);
  EXPECT_EQ(a1[1], 1);
  const auto a2 = solve_ak(2);
  EXPECT_EQ(a2[0], 1);
  EXPECT_EQ(a2[1], -3);
  EXPECT_EQ(a2[2], 2);
  EXPECT_EQ(solve_ak(12)[12], 479001600);
}

TEST(Combinatorics, SolveAkExtendsBeyondDefiningRange) {
  for (long k = 1; k <= 25; ++k) {
    const auto a = solve_ak(k);
    EXPECT_EQ(a[static_cast<std::size_t>(k)], fact(static_cast<unsigned long>(k)));
    for (unsigned long n = 0; n <= static_cast<unsigned long>(k) + 5; ++n) {
      ExactInt lhs = 0;
      for (long j = 0; j <= k; ++j) lhs += bin(n + static_cast<unsigned long>(j), static_cast<unsigned long>(j)) * a[static_cast<std::size_t>(j)];
      ExactInt rhs;
      mpz_ui_pow_ui(rhs.get_mpz_t(), n, static_cast<unsigned long>(k));
      ASSERT_EQ(lhs, rhs) << "k=" << k << " n=" << n;
    }
  }
}

TEST(Combinatorics, AlternatingSums) {
  for (long k : {2L, 7L, 30L}) {
    const auto [s0, s1] = alternating_sums(k);
    EXPECT_EQ(s0, 0);
    EXPECT_EQ(s1, 0);
  }
  for (long k = 2; k <= 25; ++k) EXPECT_EQ(alternating_derivative_sum(k), 0);
  EXPECT_EQ(alternating_derivative_sum(1), -1);
}

TEST(Combinatorics, HockeyStick) {
  const auto [l, r] = hockey_stick(2, 1);
  EXPECT_EQ(l, 6);
  EXPECT_EQ(r, 6);
  // m = 0 already has two terms: C(i-1, i-1) + C(i, i-1) = 1 + i.
  for (long i = 1; i <= 30; ++i) {
    const auto [lhs, rhs] = hockey_stick(i, 0);
    EXPECT_EQ(lhs, 1 + i);
    EXPECT_EQ(rhs, i + 1);
  }
  for (long i = 1; i <= 25; ++i) {
    for (long m = 0; m <= 25; ++m) {
      ExactInt lhs = 0;
      for (long t = 0; t <= m + 1; ++t) lhs += bin(static_cast<unsigned long>(i - 1 + t), static_cast<unsigned long>(i - 1));
      const auto got = hockey_stick(i, m);
      ASSERT_EQ(got.first, lhs);
      ASSERT_EQ(got.second, bin(static_cast<unsigned long>(i + m + 1), static_cast<unsigned long>(i)));
      ASSERT_EQ(got.first, got.second);
    }
  }
  const auto [l5, r5] = hockey_stick(5, 20);
  EXPECT_EQ(l5, r5);
}

TEST(Combinatorics, SuiteAllPassQuickly) {
  const auto start = std::chrono::steady_clock::now();
  const auto checks = identity_suite(25);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << " k=" << c.k << " " << c.detail;
  EXPECT_LT(secs, 5.0);
}
