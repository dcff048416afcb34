#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "goldbachkit/errors.hpp"
#include "goldbachkit/goldbach.hpp"
#include "goldbachkit/numeric.hpp"
#include "goldbachkit/zeros.hpp"
#include "support.hpp"

using namespace gbk;
using cd = std::complex<double>;

namespace {

const ZeroTable& bundled() {
  static const ZeroTable z = load_zeros_file(GBK_ZERO_FILE);
  return z;
}

const MangoldtTable& table() {
  static const MangoldtTable t = build_mangoldt(20000);
  return t;
}

ZeroTable parse(const std::string& text) {
  std::istringstream in(text);
  return load_zeros(in);
}

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const FormatError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST(ZeroFile, Examples) {
  EXPECT_EQ(parse("14.134725141\n21.022039639\n").size(), 2u);
  EXPECT_EQ(parse("# comment\n14.134725141\n").size(), 1u);
  EXPECT_EQ(error_line("21.0\n14.1\n"), 2);
  EXPECT_EQ(parse("\n  14.2 \n\n#x\n15\n").size(), 2u);
}

TEST(ZeroFile, Rejections) {
  EXPECT_EQ(error_line("14.2\nabc\n"), 2);
  EXPECT_EQ(error_line("-3\n"), 1);
  EXPECT_EQ(error_line("0\n"), 1);
  EXPECT_EQ(error_line("10.5\n"), 1);
  EXPECT_EQ(error_line("14.2\n14.2\n"), 2);
  EXPECT_THROW(parse("# only comments\n"), FormatError);
  EXPECT_THROW(parse(""), FormatError);
  EXPECT_THROW(load_zeros_file("/nonexistent/zeros.txt"), std::runtime_error);
}

TEST(ZeroFile, BundledTable) {
  ASSERT_EQ(bundled().size(), 100u);
  EXPECT_NEAR(bundled().ordinates.front(), 14.134725141734693, 1e-14);
  EXPECT_NEAR(bundled().ordinates[1], 21.022039638771555, 1e-14);
  EXPECT_NEAR(bundled().ordinates.back(), 236.524229665816206, 1e-12);
  double inv_sq = 0.0;
  for (double g : bundled().ordinates) inv_sq += 1.0 / (g * g);
  EXPECT_NEAR(inv_sq, 0.0199941, 1e-6);
}

TEST(HkZeroSum, SingleZeroTerm) {
  const ZeroTable one{{14.134725141}, "one"};
  const cd rho{0.5, 14.134725141};
  const cd term = std::pow(cd{100.0, 0.0}, rho + 1.0) / (rho * (rho + 1.0));
  const double expect = -2.0 * 2.0 * term.real();
  EXPECT_NEAR(hk_zero_sum(one, 2, 100.0).value, expect, 1e-12 * std::abs(expect));
}

TEST(HkZeroSum, AgreesWithComplexPowerEvaluation) {
  for (int k : {2, 3, 5}) {
    for (double X : {50.0, 1e3, 3.7e4}) {
      double expect = 0.0;
      for (double g : bundled().ordinates) {
        cd prod{1.0, 0.0};
        const cd rho{0.5, g};
        for (int i = 0; i < k; ++i) prod *= rho + static_cast<double>(i);
        expect += 2.0 * (std::pow(cd{X, 0.0}, rho + static_cast<double>(k - 1)) / prod).real();
      }
      expect *= -k;
      const double got = hk_zero_sum(bundled(), k, X).value;
      EXPECT_NEAR(got, expect, 1e-10 * hk_abs_bound(bundled(), k, X)) << "k=" << k << " X=" << X;
    }
  }
}

TEST(HkZeroSum, EmptyTableRejected) {
  EXPECT_THROW(hk_zero_sum(ZeroTable{}, 2, 100.0), std::invalid_argument);
  EXPECT_THROW(hk_zero_sum(bundled(), 1, 100.0), std::invalid_argument);
}

TEST(HkZeroSum, BoundAndOrderIndependence) {
  const double X = 1e4;
  double inv_sq = 0.0;
  for (double g : bundled().ordinates) inv_sq += 1.0 / (g * g);
  const double h2 = hk_zero_sum(bundled(), 2, X).value;
  // Folding rho with its conjugate doubles the per-ordinate weight.
  EXPECT_LE(std::abs(h2), 4.0 * std::pow(X, 1.5) * inv_sq);
  EXPECT_LE(std::abs(h2), hk_abs_bound(bundled(), 2, X));
  for (int k = 2; k <= 6; ++k) {
    for (double x : {10.0, 1e3, 1e5}) {
      const double up = hk_zero_sum(bundled(), k, x, SumOrder::ascending).value;
      const double down = hk_zero_sum(bundled(), k, x, SumOrder::descending).value;
      EXPECT_LE(std::abs(up - down), 1e-12 * std::max(std::abs(up), 1e-300) + 1e-300);
    }
  }
}

TEST(HkZeroSum, TruncationEstimateShrinksWithMoreZeros) {
  ZeroTable half{std::vector<double>(bundled().ordinates.begin(), bundled().ordinates.begin() + 50), "half"};
  EXPECT_GT(hk_zero_sum(half, 2, 1e4).truncation_estimate, hk_zero_sum(bundled(), 2, 1e4).truncation_estimate);
}

TEST(Granville, Examples) {
  const cd rho{0.5, 14.134725141};
  const cd r2 = granville_rk(2, 14.134725141);
  EXPECT_NEAR(std::abs(r2 - (-2.0 / rho)), 0.0, 1e-15);
  const cd r3 = granville_rk(3, 14.134725141);
  EXPECT_NEAR(std::abs(r3 - (-3.0 / (rho * (rho + 1.0)))), 0.0, 1e-16);
}

TEST(Granville, PerZeroConsistency) {
  for (auto [k, g, X] : {std::tuple{2, 14.134725141, 50.0}, std::tuple{5, 21.022039639, 1e3},
                         std::tuple{3, 25.010857580, 7.0}}) {
    const auto [lhs, rhs] = rk_hk_consistency(k, g, X);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::abs(rhs));
  }
  for (int k = 2; k <= 8; ++k) {
    for (double g : bundled().ordinates) {
      const auto [lhs, rhs] = rk_hk_consistency(k, g, 1234.5);
      ASSERT_LE(std::abs(lhs - rhs), 1e-12 * std::abs(rhs)) << "k=" << k << " gamma=" << g;
    }
  }
}

TEST(ExplicitFormula, Constants) {
  EXPECT_NEAR(kLogDerivZetaAt0, std::log(2 * kPi), 1e-15);
  // zeta'(-1)/zeta(-1) by a central difference of the Euler-Maclaurin zeta.
  const double h = 1e-4;
  const Complex up = zeta_euler_maclaurin({-1.0 + h, 0.0});
  const Complex down = zeta_euler_maclaurin({-1.0 - h, 0.0});
  const Complex mid = zeta_euler_maclaurin({-1.0, 0.0});
  EXPECT_NEAR(mid.real(), -1.0 / 12.0, 1e-13);
  EXPECT_NEAR(((up - down) / (2 * h) / mid).real(), kLogDerivZetaAtMinus1, 1e-7);
}

TEST(ExplicitFormula, PsiOneWithinCalibratedThreshold) {
  const auto& cal = gbk_test::calibration().at("psi1_explicit_over_x");
  for (double x : {1e2, 1e3, 1e4}) {
    const auto e = psi1_explicit(bundled(), table(), x);
    EXPECT_EQ(e.direct, riesz_psi_j(table(), {1, x}));
    const double rel = std::abs(e.formula - e.direct) / x;
    EXPECT_LE(rel, cal.at(std::to_string(static_cast<int>(x))).get<double>() * gbk_test::slack()) << "x=" << x;
  }
  EXPECT_LT(std::abs(psi1_explicit(bundled(), table(), 100.0).formula - riesz_psi_j(table(), {1, 100.0})) / 100.0,
            0.05);
}

TEST(ExplicitFormula, ZeroSumReducesResidual) {
  const ZeroTable none;
  for (double x : {100.0, 1000.0, 5000.0}) {
    const auto with = psi1_explicit(bundled(), table(), x);
    const auto without = psi1_explicit(none, table(), x);
    EXPECT_LT(std::abs(with.formula - with.direct), std::abs(without.formula - without.direct)) << x;
  }
}

TEST(ExplicitFormula, HigherOrders) {
  const auto& cal = gbk_test::calibration().at("psij_explicit_over_xj_at_1000");
  for (int j : {2, 3}) {
    const auto e = psij_explicit(bundled(), table(), j, 1e3);
    EXPECT_LE(std::abs(e.formula - e.direct) / std::pow(1e3, j), cal.at(std::to_string(j)).get<double>() * gbk_test::slack());
  }
  // Order one differs from the refined formula only in its O(x) terms.
  for (double x : {100.0, 1e3, 1e4}) {
    const auto a = psij_explicit(bundled(), table(), 1, x);
    const auto b = psi1_explicit(bundled(), table(), x);
    EXPECT_EQ(a.direct, b.direct);
    EXPECT_LE(std::abs(a.formula - b.formula), 2.0 * x);
  }
}

TEST(Residual, BookkeepingAndBoundary) {
  const auto g = gk_fft(table(), 2, 8192);
  const auto s = sk_prefix(g);
  const std::vector<double> grid{2.0, 1024.0, 4096.0, 8192.0};
  const auto rep = residual_report(s, bundled(), grid);
  ASSERT_EQ(rep.rows.size(), 4u);
  EXPECT_EQ(rep.zeros_used, 100u);
  for (const auto& r : rep.rows) {
    EXPECT_EQ(r.residual, r.S - r.main - r.H);
    EXPECT_EQ(r.main, r.X * r.X / 2.0);
    EXPECT_EQ(r.H, hk_zero_sum(bundled(), 2, r.X).value);
    EXPECT_GE(r.truncation_estimate, 0.0);
  }
  const auto& b = rep.rows.front();
  EXPECT_EQ(b.S, 0.0);
  EXPECT_EQ(b.residual, -2.0 - b.H);
  EXPECT_THROW(residual_report(s, bundled(), std::vector<double>{9000.0}), std::out_of_range);
}

TEST(Residual, CalibratedRegression) {
  const auto t = build_mangoldt(1 << 17);
  const auto& cal = gbk_test::calibration();
  const auto rep2 = residual_report(sk_prefix(gk_fft(t, 2, 1 << 17)), bundled(), geometric_grid(1024, 131072, 2));
  EXPECT_EQ(rep2.rows.size(), 8u);
  EXPECT_LE(rep2.max_normalized(), cal.at("residual_k2_cstar").get<double>() * gbk_test::slack());
  const auto rep3 = residual_report(sk_prefix(gk_fft(t, 3, 8192)), bundled(), geometric_grid(1024, 8192, 2));
  EXPECT_LE(rep3.max_normalized(), cal.at("residual_k3_cstar").get<double>() * gbk_test::slack());
}

TEST(Grid, Geometric) {
  const auto g = geometric_grid(1024, 131072, 2);
  ASSERT_EQ(g.size(), 8u);
  EXPECT_EQ(g.back(), 131072.0);
  EXPECT_THROW(geometric_grid(10, 100, 1.0), std::invalid_argument);
  EXPECT_THROW(geometric_grid(100, 10, 2.0), std::invalid_argument);
  EXPECT_THROW(geometric_grid(0, 10, 2.0), std::invalid_argument);
}

TEST(ZetaCriticalLine, KnownValues) {
  const Complex z2 = zeta_euler_maclaurin({2.0, 0.0});
  EXPECT_NEAR(z2.real(), kPi * kPi / 6.0, 1e-14);
  EXPECT_NEAR(z2.imag(), 0.0, 1e-15);
  EXPECT_NEAR(zeta_euler_maclaurin({0.0, 0.0}).real(), -0.5, 1e-14);
  EXPECT_LT(std::abs(zeta_euler_maclaurin({0.5, bundled().ordinates[0]})), 1e-12);
}

TEST(ZetaCriticalLine, ThetaAndHardyZ) {
  for (double t : {20.0, 50.0, 100.0, 230.0}) {
    // Large-t expansion of theta, independent of the log-Gamma route.
    const double asym = t / 2 * std::log(t / (2 * kPi)) - t / 2 - kPi / 8 + 1 / (48 * t) + 7 / (5760 * t * t * t);
    EXPECT_NEAR(riemann_siegel_theta(t), asym, 1e-7);
    const Complex rotated = std::polar(1.0, riemann_siegel_theta(t)) * zeta_euler_maclaurin({0.5, t});
    EXPECT_NEAR(rotated.imag(), 0.0, 1e-11);
    EXPECT_NEAR(hardy_z(t), rotated.real(), 1e-12);
  }
}

TEST(ZetaCriticalLine, BracketingReproducesTable) {
  EXPECT_NEAR(bracket_zero(14.0, 14.5), bundled().ordinates[0], 1e-9);
  EXPECT_NEAR(bracket_zero(20.5, 21.5), bundled().ordinates[1], 1e-9);
  EXPECT_THROW(bracket_zero(15.0, 16.0), std::invalid_argument);
}
