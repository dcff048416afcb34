#pragma once

#include <cstdint>
#include <vector>

#include "goldbachkit/mangoldt.hpp"
#include "goldbachkit/numeric.hpp"

namespace gbk {

// M equally spaced nodes z_m = R e(m / M) on the circle |z| = R = 1 - 1/N.
class CircleGrid {
 public:
  CircleGrid(std::int64_t N, std::int64_t M);

  std::int64_t N() const noexcept { return N_; }
  std::int64_t M() const noexcept { return M_; }
  double radius() const noexcept { return R_; }
  double theta(std::int64_t m) const noexcept { return static_cast<double>(m) / static_cast<double>(M_); }
  Complex z(std::int64_t m) const noexcept { return R_ * unit_circle(theta(m)); }
  // |1 - z_m|, evaluated from the folded angle so nodes m and M - m agree exactly.
  double distance_to_one(std::int64_t m) const noexcept;

 private:
  std::int64_t N_;
  std::int64_t M_;
  double R_;
};

// Major arc: |1 - z| < N^{delta/(k+1) - 1}.
struct ArcClassification {
  int k = 2;
  double delta = 0.5;
  double threshold = 0.0;
  std::vector<bool> major;   // per node
  double major_measure = 0.0;  // fraction of nodes flagged major
};

inline constexpr double kDefaultArcDelta = 0.5;

ArcClassification arc_classify(const CircleGrid& grid, int k, double delta = kDefaultArcDelta);

// Exact angular measure (as a fraction of the full turn) of the major arc.
double major_arc_measure_exact(std::int64_t N, int k, double delta);

// S_0(alpha, x) = sum_{n <= x} (Lambda(n) - 1) e(n alpha)
Complex s0_sum(const MangoldtTable& table, double alpha, double x);

// I(X, alpha) = sum_{1 <= n <= X} e(n alpha); checks |I| <= min(floor X, 1/(2||alpha||)).
Complex dirichlet_I(double X, double alpha);

// E_X(|S_0(alpha)|^2) = (1/X) int_X^{2X} |S_0(alpha, x)|^2 dx, evaluated exactly
// from the step structure of S_0 in x.
double expected_value_E(const MangoldtTable& table, double alpha, double X);

struct Diagnostic {
  double value = 0.0;
  double reference = 0.0;
  double ratio() const noexcept { return value / reference; }
};

// (int_{-1/2h}^{1/2h} E_X(|S_0(alpha)|^2) d alpha, X log^2 X / h)
Diagnostic gy_lemma_diagnostic(const MangoldtTable& table, double X, double h);

struct SeriesValue {
  Complex value;
  double tail_bound = 0.0;  // bound on |sum_{n > M} Lambda(n) z^n|
};

// F(z) = sum_{n <= M} Lambda(n) z^n by compensated Horner evaluation.
// Throws std::domain_error when |z| >= 1.
SeriesValue f_partial(const MangoldtTable& table, Complex z, std::int64_t M);

// K(z) = z^{-N-1} (1 - z^N) / (1 - z), switching to the geometric-sum form
// z^{-N-1} sum_{j<N} z^j when |1 - z| < 1e-6. Throws std::domain_error at z = 0.
Complex kernel_K(Complex z, std::int64_t N);
Complex kernel_K_closed(Complex z, std::int64_t N);
Complex kernel_K_geometric(Complex z, std::int64_t N);

struct ArcSample {
  double theta = 0.0;
  Complex value;  // F(z) truncated at the table limit
  bool major = false;
};

// F on every node of the grid together with its arc label.
std::vector<ArcSample> arc_sweep(const MangoldtTable& table, const CircleGrid& grid, int k,
                                 double delta = kDefaultArcDelta);

struct CauchyRecovery {
  double quadrature = 0.0;   // trapezoid rule for (1/2 pi i) \oint F K dz on |z| = R
  double coefficient = 0.0;  // coefficient extraction, sum_{n <= N} Lambda(n)
};

// Requires table.limit >= 2N; throws std::invalid_argument when M < 4N.
CauchyRecovery cauchy_psi_recovery(const MangoldtTable& table, std::int64_t N, std::int64_t M);

struct Lemma1Check {
  double difference = 0.0;  // |sum n^k z^n - k!/(1-z)^{k+1}|
  double scale = 0.0;       // |1 - z|^{-k}
  double budget = 0.0;      // sum_{j<k} |a_j| max(1, |1-z|)^{k-1-j}; difference/scale <= budget
};

// z = (1 - 1/N) e(theta); the series is summed through its exact rational
// closed form sum_j a_j / (1-z)^{j+1}.
Lemma1Check lemma1_check(int k, std::int64_t N, double theta);

struct MinorArcL2 {
  double power_sum = 0.0;   // sum_{1 <= n <= limit} (Lambda(n) - 1)^2 R^{2n}
  double tail_bound = 0.0;  // bound on the omitted n > limit
  double reference = 0.0;   // N log N
  double ratio() const noexcept { return power_sum / reference; }
};

// Parseval evaluation of the mean square of F(z) - 1/(1-z) on |z| = R. The
// constant coefficient (-1, contributing exactly 1) is excluded from
// power_sum. Requires table.limit >= 8N.
MinorArcL2 minor_arc_l2(const MangoldtTable& table, std::int64_t N);

struct PowerSeriesIdentity {
  double convolution_error = 0.0;  // F(z)^k coefficients vs G_k
  double difference_error = 0.0;   // (1-z) sum S_k(n) z^n coefficients vs G_k
  double max_error() const noexcept { return convolution_error > difference_error ? convolution_error : difference_error; }
};

// Coefficient-level check of F(z)^k = sum G_k(n) z^n = (1-z) sum S_k(n) z^n
// for n <= N. F^k is formed by binary powering of the truncated series; G_k
// comes from the FFT path. Errors use the library tolerance metric.
PowerSeriesIdentity fz_powerseries_identity(const MangoldtTable& table, int k, std::int64_t N);

}  // namespace gbk
