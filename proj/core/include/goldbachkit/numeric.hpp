#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

namespace gbk {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Neumaier's variant of Kahan summation. Every psi-type sum in the library is
// accumulated in ascending index order through this type, which is what makes
// results reproducible bit-for-bit between routes that add the same terms.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(Complex z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }
  CompensatedComplexSum& operator+=(Complex z) noexcept {
    add(z);
    return *this;
  }
  Complex value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

// e(alpha) = exp(2 pi i alpha). The argument is reduced to [-1/2, 1/2] with a
// sign-symmetric rounding, so unit_circle(-a) == conj(unit_circle(a)) exactly.
inline Complex unit_circle(double alpha) noexcept {
  const double r = alpha - std::round(alpha);
  return {std::cos(kTwoPi * r), std::sin(kTwoPi * r)};
}

// Distance from alpha to the nearest integer.
inline double dist_to_int(double alpha) noexcept { return std::fabs(alpha - std::round(alpha)); }

// x^j for a non-negative integer exponent, by repeated multiplication.
inline double ipow(double x, int j) noexcept {
  double p = 1.0;
  for (int i = 0; i < j; ++i) p *= x;
  return p;
}

inline Complex ipow(Complex z, long long j) noexcept {
  Complex result{1.0, 0.0};
  Complex base = z;
  bool invert = j < 0;
  unsigned long long e = invert ? static_cast<unsigned long long>(-j) : static_cast<unsigned long long>(j);
  while (e) {
    if (e & 1ULL) result *= base;
    base *= base;
    e >>= 1ULL;
  }
  return invert ? 1.0 / result : result;
}

double factorial(int n);

// Binomial coefficient as a double (exact while it fits in 53 bits).
double binomial_real(std::int64_t n, std::int64_t r);

// |a - b| <= max(rel * max(|a|, |b|), abs_floor)
inline bool close_rel(double a, double b, double rel, double abs_floor = 0.0) noexcept {
  const double diff = std::fabs(a - b);
  const double scale = std::fmax(std::fabs(a), std::fabs(b));
  return diff <= std::fmax(rel * scale, abs_floor);
}

// Relative discrepancy with an absolute floor: |a-b| / max(|b|, floor).
inline double rel_error(double a, double b, double floor = 1e-300) noexcept {
  return std::fabs(a - b) / std::fmax(std::fabs(b), floor);
}

// 17 significant digits, round-trip exact for binary64.
std::string format_real(double x);

}  // namespace gbk

namespace gbk {

inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsFloor = 1e-12;

// |a - b| measured against |b| with an absolute floor: the pair passes the
// library tolerance policy (relative rel, absolute floor abs_floor) exactly
// when the returned value is <= rel.
inline double discrepancy(double a, double b, double rel = kRelTol, double abs_floor = kAbsFloor) noexcept {
  return std::fabs(a - b) / std::fmax(std::fabs(b), abs_floor / rel);
}

}  // namespace gbk
