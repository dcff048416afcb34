#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gbk {

using ExactInt = mpz_class;

// Sieved von Mangoldt values Lambda(n) for 1 <= n <= limit. Index 0 is
// present and holds 0 so that values()[n] == Lambda(n). Immutable after
// construction.
class MangoldtTable {
 public:
  std::int64_t limit() const noexcept { return limit_; }
  double operator[](std::int64_t n) const { return values_[static_cast<std::size_t>(n)]; }
  std::span<const double> values() const noexcept { return values_; }
  // Primes <= limit, ascending.
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  // Prime powers p^m <= limit, ascending (the support of Lambda).
  std::span<const std::uint32_t> prime_powers() const noexcept { return prime_powers_; }

 private:
  friend MangoldtTable build_mangoldt(std::int64_t limit);

  std::int64_t limit_ = 0;
  std::vector<double> values_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint32_t> prime_powers_;
};

// Linear (smallest-prime-factor) sieve. Throws std::invalid_argument when limit < 2.
MangoldtTable build_mangoldt(std::int64_t limit);

// psi(x) = sum_{n <= x} Lambda(n). Throws std::out_of_range when x > limit.
double chebyshev_psi(const MangoldtTable& table, double x);

struct PsiJQuery {
  int j = 0;       // Riesz order
  double x = 1.0;  // argument
};

// psi_j(x) = (1/j!) sum_{n <= x} Lambda(n) (x - n)^j, by direct weighted sum.
double riesz_psi_j(const MangoldtTable& table, PsiJQuery q);

// Generic Riesz mean (1/j!) sum_{1 <= n <= x} w[n] (x - n)^j over an
// index-addressed weight array (w[0] is ignored).
double riesz_mean(std::span<const double> w, int j, double x);

// Exact integral over [0, x] of the order-j Riesz mean of w. The integrand is
// a polynomial on every unit cell [m, m+1), so the integral is assembled cell
// by cell from polynomial moments; no quadrature is involved.
double riesz_mean_integral(std::span<const double> w, int j, double x);

// (psi_j(x+1) - psi_j(x), x^j)
std::pair<double, double> psi_shift_check(const MangoldtTable& table, int j, double x);

// (psi_j(x), integral_0^x psi_{j-1}(t) dt)
std::pair<double, double> psi_integral_check(const MangoldtTable& table, int j, double x);

// psi(x; q, a) = sum_{n <= x, n = a mod q} Lambda(n)
double psi_progression(const MangoldtTable& table, double x, std::int64_t q, std::int64_t a);

// Integer held as its prime factorization. Conversion to a machine integer is
// checked; it never wraps.
struct FactoredInt {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;  // (prime, exponent), ascending primes

  ExactInt value() const;
  // Throws std::overflow_error when the value does not fit in 64 bits.
  std::uint64_t to_u64() const;
};

// Primes strictly below y.
std::vector<std::uint64_t> primes_below(double y);

// q = product of the primes p < y, in factored form. Throws
// std::invalid_argument when y < 2.
FactoredInt primorial(double y);

ExactInt euler_phi(const FactoredInt& n);

// Throws std::overflow_error when v is negative or does not fit in 64 bits.
std::uint64_t to_u64(const ExactInt& v);

}  // namespace gbk
