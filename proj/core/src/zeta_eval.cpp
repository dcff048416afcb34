#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "goldbachkit/zeros.hpp"

namespace gbk {

namespace {

// B_2, B_4, ..., B_24
constexpr double kBernoulli[] = {
    1.0 / 6.0,        -1.0 / 30.0,         1.0 / 42.0,          -1.0 / 30.0,
    5.0 / 66.0,       -691.0 / 2730.0,     7.0 / 6.0,           -3617.0 / 510.0,
    43867.0 / 798.0,  -174611.0 / 330.0,   854513.0 / 138.0,    -236364091.0 / 2730.0,
};

// log Gamma(w) by Stirling's series, valid for Re w > 0 and |w| large.
Complex log_gamma_stirling(Complex w) {
  Complex r = (w - 0.5) * std::log(w) - w + 0.5 * std::log(kTwoPi);
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex p = inv;
  for (int n = 1; n <= 10; ++n) {
    r += kBernoulli[n - 1] / (2.0 * n * (2.0 * n - 1.0)) * p;
    p *= inv2;
  }
  return r;
}

}  // namespace

Complex zeta_euler_maclaurin(Complex s) {
  if (std::abs(s - 1.0) < 1e-12) throw std::domain_error("zeta: pole at s = 1");
  const int n_terms = std::max(20, static_cast<int>(std::ceil(std::abs(s))) + 10);
  const double N = n_terms;

  CompensatedComplexSum acc;
  for (int n = 1; n < n_terms; ++n) acc.add(std::exp(-s * std::log(static_cast<double>(n))));
  const Complex n_pow = std::exp(-s * std::log(N));  // N^{-s}
  acc.add(n_pow * N / (s - 1.0));
  acc.add(0.5 * n_pow);

  // sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
  Complex poch = s;
  Complex npow = n_pow / N;
  double fact = 2.0;  // (2j)!
  for (int j = 1; j <= 12; ++j) {
    acc.add(kBernoulli[j - 1] / fact * poch * npow);
    poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    npow /= N * N;
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  return acc.value();
}

double riemann_siegel_theta(double t) {
  constexpr int kShift = 10;
  const Complex z{0.25, 0.5 * t};
  Complex lg = log_gamma_stirling(z + static_cast<double>(kShift));
  for (int j = 0; j < kShift; ++j) lg -= std::log(z + static_cast<double>(j));
  return lg.imag() - 0.5 * t * std::log(kPi);
}

double hardy_z(double t) {
  const double th = riemann_siegel_theta(t);
  const Complex rot{std::cos(th), std::sin(th)};
  return (rot * zeta_euler_maclaurin({0.5, t})).real();
}

double bracket_zero(double lo, double hi, double tol) {
  double f_lo = hardy_z(lo);
  const double f_hi = hardy_z(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) throw std::invalid_argument("bracket_zero: no sign change on bracket");
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = hardy_z(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace gbk
