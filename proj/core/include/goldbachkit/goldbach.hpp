#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "goldbachkit/mangoldt.hpp"

namespace gbk {

enum class GkMethod { direct, fft };

std::string_view to_string(GkMethod m) noexcept;

// G_k(n) = sum over ordered compositions n_1 + ... + n_k = n (n_i >= 1) of
// Lambda(n_1) ... Lambda(n_k), for 0 <= n <= limit. Entries below k are 0.
struct GoldbachTable {
  int k = 0;
  std::int64_t limit = 0;
  std::vector<double> values;
  GkMethod method = GkMethod::direct;

  double operator[](std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }
};

// S_k(X) = sum_{n <= X} G_k(n) for integer 0 <= X <= limit.
struct PrefixSums {
  int k = 0;
  std::int64_t limit = 0;
  std::vector<double> sums;

  double operator[](std::int64_t x) const { return sums[static_cast<std::size_t>(x)]; }
};

inline constexpr std::int64_t kDefaultDirectCap = 8192;

// Oracle: k - 1 successive direct convolutions with Lambda. O(k N pi(N)).
// Throws BudgetExceeded when N > cap.
GoldbachTable gk_direct(const MangoldtTable& table, int k, std::int64_t N,
                        std::int64_t cap = kDefaultDirectCap);

// Fast path: k - 1 successive FFT convolutions truncated at N. Every nonzero
// G_j(n) is a sum of products of j logarithms of primes, hence at least
// (log 2)^j; computed entries below half that are exact zeros and are stored
// as 0.
GoldbachTable gk_fft(const MangoldtTable& table, int k, std::int64_t N);

PrefixSums sk_prefix(const GoldbachTable& g);

// B_k(n, x) = sum over compositions of n into k parts, each in [1, x], of
// prod (Lambda(n_i) - 1).
double bk_truncated(const MangoldtTable& table, int k, std::int64_t n, std::int64_t x);

// (B_k(n, n), inclusion-exclusion expansion of the same sum through
// G_s, s = 0..k). For x >= n the truncation is inactive.
std::pair<double, double> bk_decomposition_check(const MangoldtTable& table, int k, std::int64_t n);

// T_j(X, m) = (1/j!) sum_{n <= X} (X - n)^j G_m(n), m = g.k.
double riesz_T(int j, double X, const GoldbachTable& g);

// (T_{j+1}(X), exact piecewise integral of T_j over [0, X])
std::pair<double, double> riesz_T_integral_check(int j, double X, const GoldbachTable& g);

struct SingularSeriesQuery {
  int k = 2;
  std::int64_t n = 1;
  double prime_cutoff = 1e5;
};

struct SingularSeriesValue {
  double value = 0.0;       // product over p <= P and over all p | n
  double tail_bound = 0.0;  // rigorous bound on |full product - value|
};

// Truncated Euler product for the singular series
//   prod_{p | n} (1 - (-1/(p-1))^{k-1}) * prod_{p not| n} (1 - (-1/(p-1))^k).
SingularSeriesValue singular_series(const SingularSeriesQuery& q);

}  // namespace gbk
