#include "goldbachkit/goldbach.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "convolution.hpp"
#include "goldbachkit/errors.hpp"
#include "goldbachkit/numeric.hpp"

namespace gbk {

namespace {

void check_gk_args(const MangoldtTable& table, int k, std::int64_t N, const char* op) {
  if (k < 2) throw std::invalid_argument(std::string(op) + ": k must be >= 2");
  if (N < 1) throw std::invalid_argument(std::string(op) + ": N must be >= 1");
  if (N > table.limit()) {
    throw std::out_of_range(std::string(op) + ": N exceeds sieve limit " + std::to_string(table.limit()));
  }
}

std::span<const double> lambda_prefix(const MangoldtTable& table, std::int64_t N) {
  return table.values().first(static_cast<std::size_t>(N) + 1);
}

}  // namespace

std::string_view to_string(GkMethod m) noexcept { return m == GkMethod::direct ? "direct" : "fft"; }

GoldbachTable gk_direct(const MangoldtTable& table, int k, std::int64_t N, std::int64_t cap) {
  check_gk_args(table, k, N, "gk_direct");
  if (N > cap) {
    throw BudgetExceeded("gk_direct: N = " + std::to_string(N) + " exceeds the direct-oracle cap " +
                         std::to_string(cap));
  }
  const auto lam = lambda_prefix(table, N);
  const auto n_out = static_cast<std::size_t>(N) + 1;
  std::vector<double> cur(lam.begin(), lam.end());
  for (int j = 2; j <= k; ++j) cur = detail::direct_convolution(cur, lam, n_out);
  return {k, N, std::move(cur), GkMethod::direct};
}

GoldbachTable gk_fft(const MangoldtTable& table, int k, std::int64_t N) {
  check_gk_args(table, k, N, "gk_fft");
  if (static_cast<std::uint64_t>(N) > std::numeric_limits<std::size_t>::max() / 4) {
    throw std::length_error("gk_fft: padding size overflow");
  }
  const auto lam = lambda_prefix(table, N);
  const auto n_out = static_cast<std::size_t>(N) + 1;
  std::vector<double> cur(lam.begin(), lam.end());
  double floor = std::numbers::ln2;
  for (int j = 2; j <= k; ++j) {
    cur = detail::truncated_convolution(cur, lam, n_out);
    floor *= std::numbers::ln2;
    for (double& v : cur) {
      if (v < 0.5 * floor) v = 0.0;
    }
  }
  return {k, N, std::move(cur), GkMethod::fft};
}

PrefixSums sk_prefix(const GoldbachTable& g) {
  PrefixSums s{g.k, g.limit, std::vector<double>(g.values.size(), 0.0)};
  CompensatedSum acc;
  for (std::size_t n = 1; n < g.values.size(); ++n) {
    acc.add(g.values[n]);
    s.sums[n] = acc.value();
  }
  return s;
}

double bk_truncated(const MangoldtTable& table, int k, std::int64_t n, std::int64_t x) {
  if (k < 1) throw std::invalid_argument("bk_truncated: k must be >= 1");
  if (x < 1 || x > table.limit()) throw std::out_of_range("bk_truncated: x outside [1, limit]");
  if (n < 0 || n > static_cast<std::int64_t>(k) * x) {
    throw std::invalid_argument("bk_truncated: n must satisfy 0 <= n <= k x");
  }
  if (n < k) return 0.0;
  // Layer j holds the j-part sums for totals 0..n, parts restricted to [1, x].
  std::vector<double> lam0(static_cast<std::size_t>(x) + 1, 0.0);
  for (std::int64_t m = 1; m <= x; ++m) lam0[static_cast<std::size_t>(m)] = table[m] - 1.0;

  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<double> cur(size, 0.0);
  for (std::int64_t m = 1; m <= std::min(x, n); ++m) cur[static_cast<std::size_t>(m)] = lam0[static_cast<std::size_t>(m)];
  for (int j = 2; j <= k; ++j) {
    std::vector<double> next(size, 0.0);
    for (std::int64_t total = j; total <= n; ++total) {
      CompensatedSum acc;
      for (std::int64_t last = 1; last <= std::min(x, total - (j - 1)); ++last) {
        acc.add(cur[static_cast<std::size_t>(total - last)] * lam0[static_cast<std::size_t>(last)]);
      }
      next[static_cast<std::size_t>(total)] = acc.value();
    }
    cur = std::move(next);
  }
  return cur[static_cast<std::size_t>(n)];
}

std::pair<double, double> bk_decomposition_check(const MangoldtTable& table, int k, std::int64_t n) {
  if (k < 2) throw std::invalid_argument("bk_decomposition_check: k must be >= 2");
  if (n < k || n > table.limit()) {
    throw std::out_of_range("bk_decomposition_check: need k <= n <= limit");
  }
  const double lhs = bk_truncated(table, k, n, n);

  // prod (Lambda(n_i) - 1) = sum over subsets S of (-1)^{k-|S|} prod_{i in S} Lambda(n_i).
  // Summed over compositions, a subset of size s contributes
  //   W_s = sum_m G_s(m) * #{compositions of n - m into k - s parts} = sum_m G_s(m) C(n-m-1, k-s-1)
  // with W_0 = C(n-1, k-1) and W_k = G_k(n).
  std::vector<std::vector<double>> g(static_cast<std::size_t>(k) + 1);
  const auto lam = table.values().first(static_cast<std::size_t>(n) + 1);
  g[1].assign(lam.begin(), lam.end());
  for (int s = 2; s <= k; ++s) {
    g[static_cast<std::size_t>(s)] =
        detail::direct_convolution(g[static_cast<std::size_t>(s) - 1], lam, static_cast<std::size_t>(n) + 1);
  }

  CompensatedSum rhs;
  for (int s = 0; s <= k; ++s) {
    double w = 0.0;
    if (s == 0) {
      w = binomial_real(n - 1, k - 1);
    } else if (s == k) {
      w = g[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
    } else {
      CompensatedSum acc;
      for (std::int64_t m = s; m <= n - (k - s); ++m) {
        acc.add(g[static_cast<std::size_t>(s)][static_cast<std::size_t>(m)] * binomial_real(n - m - 1, k - s - 1));
      }
      w = acc.value();
    }
    const double sign = ((k - s) % 2 == 0) ? 1.0 : -1.0;
    rhs.add(sign * binomial_real(k, s) * w);
  }
  return {lhs, rhs.value()};
}

double riesz_T(int j, double X, const GoldbachTable& g) {
  if (X > static_cast<double>(g.limit)) throw std::out_of_range("riesz_T: X exceeds table limit");
  return riesz_mean(g.values, j, X);
}

std::pair<double, double> riesz_T_integral_check(int j, double X, const GoldbachTable& g) {
  if (X > static_cast<double>(g.limit)) throw std::out_of_range("riesz_T_integral_check: X exceeds table limit");
  return {riesz_mean(g.values, j + 1, X), riesz_mean_integral(g.values, j, X)};
}

SingularSeriesValue singular_series(const SingularSeriesQuery& q) {
  if (q.n < 1) throw std::invalid_argument("singular_series: n must be >= 1");
  if (q.k < 2) throw std::invalid_argument("singular_series: k must be >= 2");
  if (!(q.prime_cutoff >= 2.0)) throw std::invalid_argument("singular_series: prime cutoff must be >= 2");

  // Prime divisors of n, by trial division.
  std::vector<std::int64_t> divisors;
  {
    std::int64_t m = q.n;
    for (std::int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
      if (m % p == 0) {
        divisors.push_back(p);
        while (m % p == 0) m /= p;
      }
    }
    if (m > 1) divisors.push_back(m);
  }
  auto divides_n = [&](std::int64_t p) { return q.n % p == 0; };
  auto local_factor = [&](std::int64_t p, int e) {
    return 1.0 - ipow(-1.0 / static_cast<double>(p - 1), e);
  };

  double value = 1.0;
  const auto primes = primes_below(std::floor(q.prime_cutoff) + 1.0);  // p <= P
  for (std::uint64_t up : primes) {
    const auto p = static_cast<std::int64_t>(up);
    value *= divides_n(p) ? local_factor(p, q.k - 1) : local_factor(p, q.k);
  }
  for (std::int64_t p : divisors) {
    if (static_cast<double>(p) > q.prime_cutoff) value *= local_factor(p, q.k - 1);
  }

  // Omitted factors are 1 + eps_p with |eps_p| = (p-1)^{-k} =: u_p, p > P.
  // |log(1 + eps)| <= u / (1 - u), and summing over all integers m = p - 1 >= P
  // (with P' = floor(P)) gives sum_{m >= P'} m^{-k} <= P'^{-k} + P'^{1-k} / (k-1).
  const double pf = std::floor(q.prime_cutoff);
  const double u_max = std::pow(pf, -q.k);
  const double tail_sum = (u_max + std::pow(pf, 1.0 - q.k) / (q.k - 1)) / (1.0 - u_max);
  const double tail_bound = std::fabs(value) * std::expm1(tail_sum);
  return {value, tail_bound};
}

}  // namespace gbk
