#include "goldbachkit/combinatorics.hpp"

#include <stdexcept>

namespace gbk {

namespace {

ExactInt power(long base, unsigned long e) {
  ExactInt r;
  const ExactInt b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

ExactInt factorial_exact(long n) {
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

ExactInt binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  ExactInt c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return c;
}

ExactInt f_ki(long k, long i) {
  if (k < 1 || i < 0) throw std::invalid_argument("f_ki: need k >= 1, i >= 0");
  ExactInt sum = 0;
  for (long j = 0; j <= k - 1; ++j) {
    const ExactInt term = binomial(k, j) * power(k - j, static_cast<unsigned long>(i));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

bool verify_fki_recurrence(long k, long i) {
  if (k < 2 || i < 2) throw std::invalid_argument("verify_fki_recurrence: need k >= 2, i >= 2");
  return f_ki(k, i) == k * (f_ki(k, i - 1) + f_ki(k - 1, i - 1));
}

std::vector<ExactInt> solve_ak(long k) {
  if (k < 1) throw std::invalid_argument("solve_ak: k must be >= 1");
  const auto n = static_cast<std::size_t>(k) + 1;
  // Row r (n = r): sum_j C(r + j, j) a_j = r^k; augmented with the right-hand side.
  std::vector<std::vector<ExactRational>> m(n, std::vector<ExactRational>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      m[r][j] = ExactRational(binomial(static_cast<long>(r + j), static_cast<long>(j)));
    }
    m[r][n] = ExactRational(power(static_cast<long>(r), static_cast<unsigned long>(k)));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("solve_ak: singular system");
    std::swap(m[pivot], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const ExactRational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<ExactInt> a(n);
  for (std::size_t j = 0; j < n; ++j) {
    ExactRational v = m[j][n] / m[j][j];
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("solve_ak: non-integral coefficient a_" + std::to_string(j));
    a[j] = v.get_num();
  }
  if (a[static_cast<std::size_t>(k)] != factorial_exact(k)) {
    throw std::logic_error("solve_ak: leading coefficient differs from k!");
  }
  return a;
}

std::pair<ExactInt, ExactInt> alternating_sums(long k) {
  if (k < 0) throw std::invalid_argument("alternating_sums: k must be >= 0");
  ExactInt s0 = 0;
  ExactInt s1 = 0;
  for (long i = 0; i <= k; ++i) {
    const ExactInt c = binomial(k, i);
    const int sign = (i % 2 == 0) ? 1 : -1;
    s0 += sign * c;
    s1 += sign * c * (k - i);
  }
  return {s0, s1};
}

ExactInt alternating_derivative_sum(long k) {
  ExactInt s = 0;
  for (long j = 0; j <= k; ++j) {
    const ExactInt t = j * binomial(k, j);
    if (j % 2 == 0) {
      s += t;
    } else {
      s -= t;
    }
  }
  return s;
}

std::pair<ExactInt, ExactInt> hockey_stick(long i, long m) {
  if (i < 1 || m < 0) throw std::invalid_argument("hockey_stick: need i >= 1, m >= 0");
  // The run C(i-1, i-1), C(i, i-1), ..., C(i+m, i-1) has m + 2 terms.
  ExactInt lhs = 0;
  for (long top = i - 1; top <= i + m; ++top) lhs += binomial(top, i - 1);
  return {lhs, binomial(i + m + 1, i)};
}

std::vector<IdentityCheck> identity_suite(long kmax) {
  if (kmax < 2) throw std::invalid_argument("identity_suite: kmax must be >= 2");
  std::vector<IdentityCheck> out;
  auto record = [&](std::string name, long k, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), k, ok, std::move(detail)});
  };

  for (long k = 2; k <= kmax; ++k) {
    bool vanish = true;
    for (long i = 1; i < k; ++i) vanish = vanish && f_ki(k, i) == 0;
    record("f_ki_vanishes_below_k", k, vanish);

    const ExactInt fkk = f_ki(k, k);
    record("f_kk_equals_factorial", k, fkk == factorial_exact(k), fkk.get_str());

    bool rec = true;
    for (long i = 2; i <= kmax; ++i) rec = rec && verify_fki_recurrence(k, i);
    record("f_ki_recurrence", k, rec);

    bool ak_ok = true;
    std::string ak_detail;
    try {
      const auto a = solve_ak(k);
      ak_detail = a.back().get_str();
      // Extension beyond the defining range n = 0..k.
      for (long n = 0; n <= k + 5; ++n) {
        ExactInt lhs = 0;
        for (long j = 0; j <= k; ++j) lhs += binomial(n + j, j) * a[static_cast<std::size_t>(j)];
        ak_ok = ak_ok && lhs == power(n, static_cast<unsigned long>(k));
      }
    } catch (const std::logic_error& e) {
      ak_ok = false;
      ak_detail = e.what();
    }
    record("a_k_equals_factorial", k, ak_ok, ak_detail);

    const auto [s0, s1] = alternating_sums(k);
    record("alternating_binomial_sums", k, s0 == 0 && s1 == 0);
    record("alternating_derivative_sum", k, alternating_derivative_sum(k) == 0);

    bool hs = true;
    for (long i = (k == 2 ? 1 : k); i <= k; ++i) {
      for (long m = 0; m <= kmax; ++m) {
        const auto [l, r] = hockey_stick(i, m);
        hs = hs && l == r;
      }
    }
    record("hockey_stick", k, hs);
  }
  return out;
}

}  // namespace gbk
