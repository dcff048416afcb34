#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "goldbachkit/goldbach.hpp"
#include "goldbachkit/mangoldt.hpp"
#include "goldbachkit/numeric.hpp"

namespace gbk {

// (zeta'/zeta)(0) = log(2 pi)
inline constexpr double kLogDerivZetaAt0 = 1.8378770664093454836;
// (zeta'/zeta)(-1) = -12 zeta'(-1) = 12 log(A) - 1, A the Glaisher-Kinkelin constant
inline constexpr double kLogDerivZetaAtMinus1 = 1.9850537244054111506;

// Positive ordinates gamma of nontrivial zeros rho = 1/2 + i gamma, strictly
// ascending. Conjugate zeros are implicit: sums over rho fold rho and its
// conjugate into 2 Re(...).
struct ZeroTable {
  std::vector<double> ordinates;
  std::string source;

  std::size_t size() const noexcept { return ordinates.size(); }
  bool empty() const noexcept { return ordinates.empty(); }
};

// Text format: one decimal ordinate per line; lines whose first non-blank
// character is '#' are comments; blank lines are ignored. Throws FormatError
// (with the line number) on a non-numeric, non-positive, non-ascending or
// below-first-zero value, and on input with no ordinates.
ZeroTable load_zeros(std::istream& in, std::string source = "<stream>");
ZeroTable load_zeros_file(const std::filesystem::path& path);

struct ZeroSum {
  double value = 0.0;
  // Size of the omitted zeros, 2k X^{k-1/2} sum_{gamma > gamma_max} gamma^{-k},
  // with the tail sum estimated from the zero-counting density
  // dN(t) = log(t / 2 pi) dt / (2 pi).
  double truncation_estimate = 0.0;
};

enum class SumOrder { ascending, descending };

// H_k(X) = -k sum_rho X^{rho+k-1} / (rho (rho+1) ... (rho+k-1)) under RH,
// truncated to the table. Throws std::invalid_argument on an empty table, and
// std::logic_error if the result exceeds hk_abs_bound (checked on every call).
ZeroSum hk_zero_sum(const ZeroTable& zeros, int k, double X, SumOrder order = SumOrder::ascending);

// Triangle-inequality bound 2k X^{k-1/2} sum_gamma 1/|rho (rho+1) ... (rho+k-1)|.
double hk_abs_bound(const ZeroTable& zeros, int k, double X);

// r_k(rho) = -k / (rho (rho+1) ... (rho+k-2)), rho = 1/2 + i gamma.
Complex granville_rk(int k, double gamma);

// (r_k(rho) X^{rho+k-1} / (rho+k-1), -k X^{rho+k-1} / (rho ... (rho+k-1)))
std::pair<Complex, Complex> rk_hk_consistency(int k, double gamma, double X);

struct ExplicitCheck {
  double formula = 0.0;
  double direct = 0.0;
};

// x^2/2 - sum_rho x^{rho+1}/(rho(rho+1)) - (zeta'/zeta)(0) x + (zeta'/zeta)(-1)
// against the direct psi_1(x).
ExplicitCheck psi1_explicit(const ZeroTable& zeros, const MangoldtTable& table, double x);

// x^{j+1}/(j+1)! - sum_rho x^{rho+j}/(rho ... (rho+j)) against the direct psi_j(x).
ExplicitCheck psij_explicit(const ZeroTable& zeros, const MangoldtTable& table, int j, double x);

struct ResidualRow {
  double X = 0.0;
  double S = 0.0;
  double main = 0.0;
  double H = 0.0;
  double residual = 0.0;         // S - main - H
  double normalized = 0.0;       // |residual| / (X^{k-1} log^3 X)
  double normalized_eps = 0.0;   // |residual| / X^{k-1/2+eps}
  double truncation_estimate = 0.0;
};

struct ResidualReport {
  int k = 0;
  double eps = 0.0;
  std::size_t zeros_used = 0;
  std::vector<ResidualRow> rows;

  double max_normalized() const;
};

inline constexpr double kDefaultResidualEps = 0.01;

ResidualReport residual_report(const PrefixSums& s, const ZeroTable& zeros, std::span<const double> grid,
                               double eps = kDefaultResidualEps);

// Geometric grid start, start*ratio, ... <= stop (inclusive with a 1e-9
// relative slack at the end point). Throws std::invalid_argument unless
// start > 0, stop >= start, ratio > 1.
std::vector<double> geometric_grid(double start, double stop, double ratio);

// --- Critical-line evaluation of zeta, independent of any zero table. ---

// zeta(s) by Euler-Maclaurin summation; accurate to ~1e-13 for |Im s| < 1e3.
Complex zeta_euler_maclaurin(Complex s);

// Riemann-Siegel theta(t) = Im log Gamma(1/4 + i t/2) - (t/2) log pi.
double riemann_siegel_theta(double t);

// Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + i t), real for real t.
double hardy_z(double t);

// Zero of Z in [lo, hi] by bisection on a sign change, to absolute tolerance
// tol. Throws std::invalid_argument if Z does not change sign on the bracket.
double bracket_zero(double lo, double hi, double tol = 1e-12);

}  // namespace gbk
