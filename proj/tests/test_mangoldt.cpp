#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "goldbachkit/mangoldt.hpp"
#include "goldbachkit/numeric.hpp"
#include "support.hpp"

using namespace gbk;

namespace {

const MangoldtTable& table() {
  static const MangoldtTable t = build_mangoldt(20000);
  return t;
}

// (1/j!) sum_{n <= x} Lambda(n) (x - n)^j with trial-division Lambda.
double psi_j_oracle(int j, double x) {
  double s = 0.0;
  for (std::int64_t n = 1; n <= static_cast<std::int64_t>(x); ++n) {
    s += gbk_test::lambda_trial(n) * std::pow(x - static_cast<double>(n), j);
  }
  return s / std::tgamma(j + 1.0);
}

}  // namespace

TEST(Mangoldt, SmallValues) {
  EXPECT_EQ(table()[1], 0.0);
  EXPECT_EQ(table()[8], std::log(2.0));
  EXPECT_EQ(table()[6], 0.0);
  EXPECT_EQ(table()[9], std::log(3.0));
  EXPECT_EQ(table()[0], 0.0);
}

TEST(Mangoldt, MatchesTrialFactorization) {
  for (std::int64_t n = 1; n <= 10000; ++n) {
    ASSERT_EQ(table()[n], gbk_test::lambda_trial(n)) << "n=" << n;
  }
}

TEST(Mangoldt, PrimeAndPrimePowerLists) {
  const auto primes = table().primes();
  std::size_t count = 0;
  for (std::int64_t n = 2; n <= table().limit(); ++n) count += gbk_test::is_prime_trial(n) ? 1 : 0;
  EXPECT_EQ(primes.size(), count);
  for (auto p : table().prime_powers()) EXPECT_GT(table()[p], 0.0);
}

TEST(Mangoldt, TotalMatchesPerPrimePowerLogSum) {
  // psi(N) = sum_p floor(log_p N) log p, accumulated per prime.
  const std::int64_t N = table().limit();
  CompensatedSum oracle;
  for (std::int64_t p = 2; p <= N; ++p) {
    if (!gbk_test::is_prime_trial(p)) continue;
    int e = 0;
    for (std::int64_t q = p; q <= N; q *= p) ++e;
    oracle.add(e * std::log(static_cast<double>(p)));
  }
  EXPECT_LE(discrepancy(chebyshev_psi(table(), static_cast<double>(N)), oracle.value()), 1e-9);
}

TEST(Mangoldt, RejectsTinyLimit) { EXPECT_THROW(build_mangoldt(1), std::invalid_argument); }

TEST(Chebyshev, Examples) {
  EXPECT_EQ(chebyshev_psi(table(), 1.0), 0.0);
  const double psi10 = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
  EXPECT_NEAR(chebyshev_psi(table(), 10.0), psi10, 1e-14);
  EXPECT_NEAR(psi10, 7.832014, 1e-6);
  EXPECT_LE(std::abs(chebyshev_psi(table(), 10000.0) - 10000.0), 0.02 * 10000.0);
  EXPECT_THROW(chebyshev_psi(table(), 20001.0), std::out_of_range);
}

TEST(Chebyshev, MonotoneAndRieszMeansNonnegative) {
  double prev = 0.0;
  for (double x = 1.0; x <= 3000.0; x += 0.75) {
    const double v = chebyshev_psi(table(), x);
    EXPECT_GE(v, prev);
    prev = v;
  }
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(1.0, 2000.0);
  for (int i = 0; i < 200; ++i) {
    const double x = ux(rng);
    const int j = i % 5;
    EXPECT_GE(riesz_psi_j(table(), {j, x}), 0.0);
  }
}

TEST(RieszPsi, OrderZeroIsPsiBitForBit) {
  for (double x : {2.0, 10.0, 99.5, 1234.0, 20000.0}) EXPECT_EQ(riesz_psi_j(table(), {0, x}), chebyshev_psi(table(), x));
}

TEST(RieszPsi, HandSums) {
  EXPECT_NEAR(riesz_psi_j(table(), {1, 3.0}), std::log(2.0), 1e-15);
  EXPECT_NEAR(riesz_psi_j(table(), {2, 4.0}), 2 * std::log(2.0) + std::log(3.0) / 2, 1e-15);
  for (int j = 0; j <= 4; ++j) {
    for (double x : {7.0, 31.5, 200.0}) {
      EXPECT_LE(discrepancy(riesz_psi_j(table(), {j, x}), psi_j_oracle(j, x)), 1e-12);
    }
  }
}

TEST(RieszPsi, ShiftCheck) {
  const auto [d1, s1] = psi_shift_check(table(), 1, 100.0);
  EXPECT_LE(d1, chebyshev_psi(table(), 101.0));
  EXPECT_LE(d1 / s1, 3.0);

  const auto [d2, s2] = psi_shift_check(table(), 2, 10.0);
  EXPECT_NEAR(d2, psi_j_oracle(2, 11.0) - psi_j_oracle(2, 10.0), 1e-12);
  EXPECT_EQ(s2, 100.0);

  const auto [d3, s3] = psi_shift_check(table(), 1, 1.0);
  EXPECT_EQ(d3, 0.0);
  EXPECT_EQ(s3, 1.0);
}

TEST(RieszPsi, IntegralIdentity) {
  EXPECT_NEAR(psi_integral_check(table(), 1, 3.0).second, std::log(2.0), 1e-15);
  EXPECT_NEAR(psi_integral_check(table(), 2, 4.0).second, 2 * std::log(2.0) + std::log(3.0) / 2, 1e-14);
  EXPECT_EQ(psi_integral_check(table(), 1, 2.0).second, 0.0);
  EXPECT_EQ(psi_integral_check(table(), 1, 2.0).first, 0.0);
  for (int j = 1; j <= 4; ++j) {
    for (double x : {2.5, 10.0, 57.3, 250.0, 999.9, 1000.0}) {
      const auto [lhs, rhs] = psi_integral_check(table(), j, x);
      EXPECT_LE(discrepancy(lhs, rhs), 1e-9) << "j=" << j << " x=" << x;
    }
  }
}

TEST(Progression, Examples) {
  EXPECT_EQ(psi_progression(table(), 10.0, 1, 0), chebyshev_psi(table(), 10.0));
  EXPECT_NEAR(psi_progression(table(), 10.0, 4, 3), std::log(3.0) + std::log(7.0), 1e-15);
  EXPECT_NEAR(psi_progression(table(), 10.0, 4, 0), 2 * std::log(2.0), 1e-15);
}

TEST(Progression, ClassesPartitionPsi) {
  for (std::int64_t q : {1, 2, 6, 7, 30, 210}) {
    CompensatedSum total;
    for (std::int64_t a = 0; a < q; ++a) total.add(psi_progression(table(), 5000.0, q, a));
    EXPECT_LE(discrepancy(total.value(), chebyshev_psi(table(), 5000.0)), 1e-9);
  }
}

TEST(Primorial, ExamplesAndPhi) {
  EXPECT_EQ(primorial(3.0).to_u64(), 2u);
  EXPECT_EQ(euler_phi(primorial(3.0)), 1);
  EXPECT_EQ(primorial(11.0).to_u64(), 210u);
  EXPECT_EQ(euler_phi(primorial(11.0)), 48);
  EXPECT_EQ(primorial(20.0).to_u64(), 9699690u);
  EXPECT_THROW(primorial(1.5), std::invalid_argument);
}

TEST(Primorial, OverflowIsReportedNotWrapped) {
  const auto q = primorial(100.0);
  EXPECT_THROW(q.to_u64(), std::overflow_error);
  ExactInt expect = 1;
  for (std::int64_t p = 2; p < 100; ++p) {
    if (gbk_test::is_prime_trial(p)) expect *= static_cast<unsigned long>(p);
  }
  EXPECT_EQ(q.value(), expect);
  EXPECT_THROW(to_u64(ExactInt(-1)), std::overflow_error);
}

TEST(Primorial, PrimesBelowIsStrict) {
  const auto ps = primes_below(7.0);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps.back(), 5u);
}
