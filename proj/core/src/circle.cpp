#include "goldbachkit/circle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "goldbachkit/combinatorics.hpp"
#include "goldbachkit/goldbach.hpp"

namespace gbk {

namespace {

struct TwoTerm {
  double hi;
  double lo;
};

TwoTerm two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double z = s - a;
  return {s, (a - (s - z)) + (b - z)};
}

TwoTerm two_prod(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Error-free complex product: x * y == hi + lo exactly up to the final
// rounding of the two-term components.
struct ComplexTwoTerm {
  Complex hi;
  Complex lo;
};

ComplexTwoTerm two_prod(Complex x, Complex y) noexcept {
  const TwoTerm ac = two_prod(x.real(), y.real());
  const TwoTerm bd = two_prod(x.imag(), y.imag());
  const TwoTerm ad = two_prod(x.real(), y.imag());
  const TwoTerm bc = two_prod(x.imag(), y.real());
  const TwoTerm re = two_sum(ac.hi, -bd.hi);
  const TwoTerm im = two_sum(ad.hi, bc.hi);
  return {{re.hi, im.hi}, {ac.lo - bd.lo + re.lo, ad.lo + bc.lo + im.lo}};
}

// sum_{n=0}^{deg} c[n] z^n, compensated Horner scheme.
Complex comp_horner(std::span<const double> c, Complex z) {
  Complex acc{0.0, 0.0};
  Complex err{0.0, 0.0};
  for (std::size_t n = c.size(); n-- > 0;) {
    const ComplexTwoTerm p = two_prod(acc, z);
    const TwoTerm s = two_sum(p.hi.real(), c[n]);
    acc = {s.hi, p.hi.imag()};
    err = err * z + p.lo + Complex{s.lo, 0.0};
  }
  return acc + err;
}

void require_table(const MangoldtTable& table, std::int64_t need, const char* op) {
  if (table.limit() < need) {
    throw std::out_of_range(std::string(op) + ": sieve limit " + std::to_string(table.limit()) +
                            " below required " + std::to_string(need));
  }
}

}  // namespace

CircleGrid::CircleGrid(std::int64_t N, std::int64_t M) : N_(N), M_(M), R_(1.0 - 1.0 / static_cast<double>(N)) {
  if (N < 1) throw std::invalid_argument("CircleGrid: N must be >= 1");
  if (M < 1) throw std::invalid_argument("CircleGrid: M must be >= 1");
}

double CircleGrid::distance_to_one(std::int64_t m) const noexcept {
  const std::int64_t folded = std::min(m, M_ - m);
  const double s = std::sin(kPi * static_cast<double>(folded) / static_cast<double>(M_));
  const double gap = 1.0 - R_;
  return std::sqrt(gap * gap + 4.0 * R_ * s * s);
}

ArcClassification arc_classify(const CircleGrid& grid, int k, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("arc_classify: delta must be in (0, 1)");
  if (k < 1) throw std::invalid_argument("arc_classify: k must be >= 1");
  ArcClassification arcs;
  arcs.k = k;
  arcs.delta = delta;
  arcs.threshold = std::pow(static_cast<double>(grid.N()), delta / (k + 1.0) - 1.0);
  arcs.major.resize(static_cast<std::size_t>(grid.M()));
  std::int64_t count = 0;
  for (std::int64_t m = 0; m < grid.M(); ++m) {
    const bool major = grid.distance_to_one(m) < arcs.threshold;
    arcs.major[static_cast<std::size_t>(m)] = major;
    count += major;
  }
  arcs.major_measure = static_cast<double>(count) / static_cast<double>(grid.M());
  return arcs;
}

double major_arc_measure_exact(std::int64_t N, int k, double delta) {
  const double R = 1.0 - 1.0 / static_cast<double>(N);
  const double T = std::pow(static_cast<double>(N), delta / (k + 1.0) - 1.0);
  const double gap = 1.0 - R;
  if (T <= gap) return 0.0;
  // |1 - R e(theta)|^2 = (1-R)^2 + 4 R sin^2(pi theta) < T^2
  const double s2 = (T * T - gap * gap) / (4.0 * R);
  if (s2 >= 1.0) return 1.0;
  return 2.0 * std::asin(std::sqrt(s2)) / kPi;
}

Complex s0_sum(const MangoldtTable& table, double alpha, double x) {
  if (x > static_cast<double>(table.limit())) throw std::out_of_range("s0_sum: x exceeds sieve limit");
  const auto top = static_cast<std::int64_t>(std::floor(x));
  CompensatedComplexSum acc;
  for (std::int64_t n = 1; n <= top; ++n) {
    acc.add((table[n] - 1.0) * unit_circle(static_cast<double>(n) * alpha));
  }
  return acc.value();
}

Complex dirichlet_I(double X, double alpha) {
  if (!(X >= 1.0)) throw std::invalid_argument("dirichlet_I: X must be >= 1");
  const double M = std::floor(X);
  const double r = alpha - std::round(alpha);
  if (r == 0.0) return {M, 0.0};
  // sum_{n=1}^{M} e(n alpha) = e((M+1) alpha / 2) sin(pi M alpha) / sin(pi alpha)
  const double ratio = std::sin(kPi * std::fmod(M * r, 2.0)) / std::sin(kPi * r);
  const Complex value = ratio * unit_circle(0.5 * (M + 1.0) * r);
  const double bound = std::fmin(M, 0.5 / std::fabs(r));
  if (std::abs(value) > bound * (1.0 + 1e-12) + 1e-12) {
    throw std::logic_error("dirichlet_I: |I| exceeds min(X, 1/(2||alpha||))");
  }
  return value;
}

double expected_value_E(const MangoldtTable& table, double alpha, double X) {
  if (!(X >= 1.0)) throw std::invalid_argument("expected_value_E: X must be >= 1");
  require_table(table, static_cast<std::int64_t>(std::ceil(2.0 * X)), "expected_value_E");
  const auto first = static_cast<std::int64_t>(std::floor(X));
  const auto last = static_cast<std::int64_t>(std::floor(2.0 * X));
  // S_0(alpha, x) is constant on [m, m+1) and equal to S_0(alpha, m).
  CompensatedComplexSum s0;
  for (std::int64_t n = 1; n < first; ++n) s0.add((table[n] - 1.0) * unit_circle(static_cast<double>(n) * alpha));
  CompensatedSum integral;
  for (std::int64_t m = first; m <= last; ++m) {
    s0.add((table[m] - 1.0) * unit_circle(static_cast<double>(m) * alpha));
    const double lo = std::fmax(static_cast<double>(m), X);
    const double hi = std::fmin(static_cast<double>(m + 1), 2.0 * X);
    if (hi > lo) integral.add((hi - lo) * std::norm(s0.value()));
  }
  return integral.value() / X;
}

Diagnostic gy_lemma_diagnostic(const MangoldtTable& table, double X, double h) {
  if (!(h >= 1.0 && h <= X)) throw std::invalid_argument("gy_lemma_diagnostic: need 1 <= h <= X");
  require_table(table, static_cast<std::int64_t>(std::ceil(2.0 * X)), "gy_lemma_diagnostic");
  // 8-point Gauss-Legendre on [0, 1/(2h)]; the integrand is even in alpha.
  static constexpr double kNodes[] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                      0.9602898564975363};
  static constexpr double kWeights[] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                        0.1012285362903763};
  // E_X is a trigonometric polynomial of degree <= 2X in alpha: resolve each
  // oscillation with several panels and keep at least 64h nodes overall.
  const double half_width = 0.5 / h;
  const auto panels = static_cast<std::int64_t>(std::max(8.0 * h, 4.0 * std::ceil(2.0 * X * half_width)));
  const double step = half_width / static_cast<double>(panels);
  CompensatedSum acc;
  for (std::int64_t p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * step;
    for (int i = 0; i < 4; ++i) {
      const double off = 0.5 * step * kNodes[i];
      acc.add(kWeights[i] * (expected_value_E(table, mid - off, X) + expected_value_E(table, mid + off, X)));
    }
  }
  const double integral = 2.0 * 0.5 * step * acc.value();
  const double log_x = std::log(X);
  return {integral, X * log_x * log_x / h};
}

SeriesValue f_partial(const MangoldtTable& table, Complex z, std::int64_t M) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw std::domain_error("f_partial: |z| must be < 1");
  if (M < 1) throw std::invalid_argument("f_partial: M must be >= 1");
  require_table(table, M, "f_partial");
  const Complex value = comp_horner(table.values().first(static_cast<std::size_t>(M) + 1), z);
  // For n > M: Lambda(n) <= log n <= log M + (n - M)/M.
  const double Md = static_cast<double>(M);
  const double tail = std::pow(r, Md + 1.0) * (std::log(Md) / (1.0 - r) + 1.0 / (Md * (1.0 - r) * (1.0 - r)));
  return {value, tail};
}

std::vector<ArcSample> arc_sweep(const MangoldtTable& table, const CircleGrid& grid, int k, double delta) {
  const ArcClassification arcs = arc_classify(grid, k, delta);
  std::vector<ArcSample> out(static_cast<std::size_t>(grid.M()));
  for (std::int64_t m = 0; m < grid.M(); ++m) {
    auto& s = out[static_cast<std::size_t>(m)];
    s.theta = grid.theta(m);
    s.value = f_partial(table, grid.z(m), table.limit()).value;
    s.major = arcs.major[static_cast<std::size_t>(m)];
  }
  return out;
}

Complex kernel_K_closed(Complex z, std::int64_t N) {
  if (z == Complex{0.0, 0.0}) throw std::domain_error("kernel_K: z = 0");
  return ipow(z, -N - 1) * (1.0 - ipow(z, N)) / (1.0 - z);
}

Complex kernel_K_geometric(Complex z, std::int64_t N) {
  if (z == Complex{0.0, 0.0}) throw std::domain_error("kernel_K: z = 0");
  Complex acc{0.0, 0.0};
  for (std::int64_t j = 0; j < N; ++j) acc = acc * z + 1.0;
  return ipow(z, -N - 1) * acc;
}

Complex kernel_K(Complex z, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("kernel_K: N must be >= 1");
  return std::abs(1.0 - z) < 1e-6 ? kernel_K_geometric(z, N) : kernel_K_closed(z, N);
}

CauchyRecovery cauchy_psi_recovery(const MangoldtTable& table, std::int64_t N, std::int64_t M) {
  if (N < 1) throw std::invalid_argument("cauchy_psi_recovery: N must be >= 1");
  if (M < 4 * N) throw std::invalid_argument("cauchy_psi_recovery: M must be >= 4N to avoid aliasing");
  require_table(table, 2 * N, "cauchy_psi_recovery");
  const double coefficient = chebyshev_psi(table, static_cast<double>(N));
  // R = 1 - 1/N collapses to the origin at N = 1; psi(1) = Lambda(1) = 0.
  if (N == 1) return {0.0, coefficient};

  const CircleGrid grid(N, M);
  const auto coeffs = table.values().first(static_cast<std::size_t>(2 * N) + 1);
  // dz = 2 pi i z d theta, so (1/2 pi i) \oint F K dz = int_0^1 F(z) K(z) z d theta.
  CompensatedComplexSum acc;
  for (std::int64_t m = 0; m < M; ++m) {
    const Complex z = grid.z(m);
    acc.add(comp_horner(coeffs, z) * kernel_K(z, N) * z);
  }
  return {acc.value().real() / static_cast<double>(M), coefficient};
}

Lemma1Check lemma1_check(int k, std::int64_t N, double theta) {
  if (k < 1) throw std::invalid_argument("lemma1_check: k must be >= 1");
  if (N < 2) throw std::invalid_argument("lemma1_check: N must be >= 2");
  const auto a = solve_ak(k);
  const Complex z = (1.0 - 1.0 / static_cast<double>(N)) * unit_circle(theta);
  const Complex w = 1.0 / (1.0 - z);
  const double dist = std::abs(1.0 - z);

  CompensatedComplexSum series;
  Complex wp = w;
  double budget = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double aj = a[static_cast<std::size_t>(j)].get_d();
    series.add(aj * wp);
    if (j < k) budget += std::fabs(aj) * ipow(std::fmax(1.0, dist), k - 1 - j);
    wp *= w;
  }
  const Complex main = factorial(k) * ipow(w, k + 1);
  return {std::abs(series.value() - main), std::pow(dist, -k), budget};
}

MinorArcL2 minor_arc_l2(const MangoldtTable& table, std::int64_t N) {
  if (N < 2) throw std::invalid_argument("minor_arc_l2: N must be >= 2");
  require_table(table, 8 * N, "minor_arc_l2");
  const double R = 1.0 - 1.0 / static_cast<double>(N);
  const double r = R * R;
  CompensatedSum acc;
  double rn = 1.0;
  for (std::int64_t n = 1; n <= table.limit(); ++n) {
    rn *= r;
    const double c = table[n] - 1.0;
    acc.add(c * c * rn);
  }
  // (Lambda(n) - 1)^2 <= 1 + log^2 n <= 1 + n
  const double L = static_cast<double>(table.limit());
  const double tail = std::pow(r, L + 1.0) * ((L + 2.0) / (1.0 - r) + r / ((1.0 - r) * (1.0 - r)));
  const double Nd = static_cast<double>(N);
  return {acc.value(), tail, Nd * std::log(Nd)};
}

PowerSeriesIdentity fz_powerseries_identity(const MangoldtTable& table, int k, std::int64_t N) {
  if (k < 2) throw std::invalid_argument("fz_powerseries_identity: k must be >= 2");
  require_table(table, N, "fz_powerseries_identity");
  const auto size = static_cast<std::size_t>(N) + 1;
  auto multiply = [size](const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> out(size, 0.0);
    for (std::size_t n = 0; n < size; ++n) {
      CompensatedSum acc;
      for (std::size_t i = 0; i <= n; ++i) {
        if (x[i] != 0.0 && y[n - i] != 0.0) acc.add(x[i] * y[n - i]);
      }
      out[n] = acc.value();
    }
    return out;
  };
  const auto lam = table.values().first(size);
  std::vector<double> base(lam.begin(), lam.end());
  std::vector<double> power(size, 0.0);
  power[0] = 1.0;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) power = multiply(power, base);
    if (e > 1) base = multiply(base, base);
  }

  const GoldbachTable g = gk_fft(table, k, N);
  const PrefixSums s = sk_prefix(g);
  PowerSeriesIdentity out;
  for (std::size_t n = 0; n < size; ++n) {
    out.convolution_error = std::max(out.convolution_error, discrepancy(power[n], g.values[n]));
    const double diff = n == 0 ? s.sums[0] : s.sums[n] - s.sums[n - 1];
    out.difference_error = std::max(out.difference_error, discrepancy(diff, g.values[n]));
  }
  return out;
}

}  // namespace gbk
