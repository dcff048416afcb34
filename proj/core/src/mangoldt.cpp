#include "goldbachkit/mangoldt.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "goldbachkit/numeric.hpp"

namespace gbk {

namespace {

constexpr std::int64_t kMaxSieveLimit = std::numeric_limits<std::uint32_t>::max() / 2;

void check_range(const MangoldtTable& table, double x, const char* op) {
  if (!(x >= 0.0)) throw std::invalid_argument(std::string(op) + ": negative argument");
  if (x > static_cast<double>(table.limit())) {
    throw std::out_of_range(std::string(op) + ": x = " + format_real(x) + " exceeds sieve limit " +
                            std::to_string(table.limit()));
  }
}

}  // namespace

MangoldtTable build_mangoldt(std::int64_t limit) {
  if (limit < 2) throw std::invalid_argument("build_mangoldt: limit must be >= 2");
  if (limit > kMaxSieveLimit) throw std::invalid_argument("build_mangoldt: limit too large");

  const auto n_max = static_cast<std::size_t>(limit);
  std::vector<std::uint32_t> spf(n_max + 1, 0);
  MangoldtTable t;
  t.limit_ = limit;
  t.values_.assign(n_max + 1, 0.0);

  for (std::size_t i = 2; i <= n_max; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      t.primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : t.primes_) {
      if (p > spf[i] || i * p > n_max) break;
      spf[i * p] = p;
    }
  }

  // n = p * m with p = spf(n) is a prime power iff m == 1, or m is itself a
  // power of p (spf(m) == p and Lambda(m) != 0).
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::uint32_t p = spf[n];
    const std::size_t m = n / p;
    if (m == 1) {
      t.values_[n] = std::log(static_cast<double>(p));
    } else if (spf[m] == p && t.values_[m] != 0.0) {
      t.values_[n] = t.values_[p];
    }
    if (t.values_[n] != 0.0) t.prime_powers_.push_back(static_cast<std::uint32_t>(n));
  }
  return t;
}

double riesz_mean(std::span<const double> w, int j, double x) {
  if (j < 0) throw std::invalid_argument("riesz_mean: negative order");
  if (!(x >= 0.0)) throw std::invalid_argument("riesz_mean: negative argument");
  const auto top = static_cast<std::int64_t>(std::floor(x));
  if (w.empty() || top > static_cast<std::int64_t>(w.size()) - 1) {
    throw std::out_of_range("riesz_mean: x beyond weight table");
  }
  CompensatedSum acc;
  for (std::int64_t n = 1; n <= top; ++n) {
    acc.add(w[static_cast<std::size_t>(n)] * ipow(x - static_cast<double>(n), j));
  }
  return acc.value() / factorial(j);
}

double riesz_mean_integral(std::span<const double> w, int j, double x) {
  if (j < 0) throw std::invalid_argument("riesz_mean_integral: negative order");
  if (!(x >= 0.0)) throw std::invalid_argument("riesz_mean_integral: negative argument");
  const auto top = static_cast<std::int64_t>(std::floor(x));
  if (w.empty() || top > static_cast<std::int64_t>(w.size()) - 1) {
    throw std::out_of_range("riesz_mean_integral: x beyond weight table");
  }
  // On [m, m + width) the integrand is (1/j!) sum_{n <= m} w[n] (u + m - n)^j
  // with u = t - m. Expand in powers of u and integrate each monomial.
  std::vector<double> binom(static_cast<std::size_t>(j) + 1);
  for (int r = 0; r <= j; ++r) binom[static_cast<std::size_t>(r)] = binomial_real(j, r);

  CompensatedSum total;
  std::vector<double> coeff(static_cast<std::size_t>(j) + 1);
  for (std::int64_t m = 1; m <= top; ++m) {
    const double width = std::fmin(1.0, x - static_cast<double>(m));
    if (width <= 0.0) break;
    for (int r = 0; r <= j; ++r) {
      CompensatedSum c;
      for (std::int64_t n = 1; n <= m; ++n) {
        const double wn = w[static_cast<std::size_t>(n)];
        if (wn == 0.0) continue;
        c.add(wn * ipow(static_cast<double>(m - n), j - r));
      }
      coeff[static_cast<std::size_t>(r)] = binom[static_cast<std::size_t>(r)] * c.value();
    }
    for (int r = 0; r <= j; ++r) {
      total.add(coeff[static_cast<std::size_t>(r)] * ipow(width, r + 1) / (r + 1));
    }
  }
  return total.value() / factorial(j);
}

double chebyshev_psi(const MangoldtTable& table, double x) {
  check_range(table, x, "chebyshev_psi");
  return riesz_mean(table.values(), 0, x);
}

double riesz_psi_j(const MangoldtTable& table, PsiJQuery q) {
  if (q.j < 0) throw std::invalid_argument("riesz_psi_j: j must be >= 0");
  check_range(table, q.x, "riesz_psi_j");
  return riesz_mean(table.values(), q.j, q.x);
}

std::pair<double, double> psi_shift_check(const MangoldtTable& table, int j, double x) {
  if (j < 1) throw std::invalid_argument("psi_shift_check: j must be >= 1");
  check_range(table, x + 1.0, "psi_shift_check");
  const double diff = riesz_psi_j(table, {j, x + 1.0}) - riesz_psi_j(table, {j, x});
  return {diff, ipow(x, j)};
}

std::pair<double, double> psi_integral_check(const MangoldtTable& table, int j, double x) {
  if (j < 1) throw std::invalid_argument("psi_integral_check: j must be >= 1");
  check_range(table, x, "psi_integral_check");
  return {riesz_psi_j(table, {j, x}), riesz_mean_integral(table.values(), j - 1, x)};
}

double psi_progression(const MangoldtTable& table, double x, std::int64_t q, std::int64_t a) {
  if (q < 1) throw std::invalid_argument("psi_progression: modulus must be >= 1");
  check_range(table, x, "psi_progression");
  const auto top = static_cast<std::int64_t>(std::floor(x));
  std::int64_t r = a % q;
  if (r < 0) r += q;
  CompensatedSum acc;
  for (std::int64_t n = (r == 0 ? q : r); n <= top; n += q) acc.add(table[n]);
  return acc.value();
}

std::vector<std::uint64_t> primes_below(double y) {
  std::vector<std::uint64_t> out;
  if (!(y > 2.0)) return out;
  const auto bound = static_cast<std::uint64_t>(std::ceil(y));  // primes p < y, i.e. p <= bound - 1
  std::vector<bool> composite(bound, false);
  for (std::uint64_t p = 2; p < bound; ++p) {
    if (composite[p]) continue;
    if (static_cast<double>(p) >= y) break;
    out.push_back(p);
    for (std::uint64_t m = p * p; m < bound; m += p) composite[m] = true;
  }
  return out;
}

FactoredInt primorial(double y) {
  if (!(y >= 2.0)) throw std::invalid_argument("primorial: cutoff must be >= 2");
  FactoredInt q;
  for (std::uint64_t p : primes_below(y)) q.factors.emplace_back(p, 1U);
  return q;
}

ExactInt FactoredInt::value() const {
  ExactInt v = 1;
  for (const auto& [p, e] : factors) {
    ExactInt pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
    v *= pe;
  }
  return v;
}

std::uint64_t to_u64(const ExactInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

std::uint64_t FactoredInt::to_u64() const { return gbk::to_u64(value()); }

ExactInt euler_phi(const FactoredInt& n) {
  ExactInt phi = 1;
  for (const auto& [p, e] : n.factors) {
    ExactInt pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e - 1);
    phi *= pe * ExactInt(static_cast<unsigned long>(p - 1));
  }
  return phi;
}

}  // namespace gbk
