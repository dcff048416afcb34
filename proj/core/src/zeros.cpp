#include "goldbachkit/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "goldbachkit/errors.hpp"

namespace gbk {

namespace {

// Lower bound for any positive zeta-zero ordinate (gamma_1 = 14.1347...).
constexpr double kFirstOrdinateFloor = 14.0;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Complex rho_of(double gamma) { return {0.5, gamma}; }

// prod_{i=0}^{order} (rho + i)
Complex rising_product(Complex rho, int order) {
  Complex p = rho;
  for (int i = 1; i <= order; ++i) p *= rho + static_cast<double>(i);
  return p;
}

// sum over all zeros (both rho and conj(rho)) of x^{rho+order} / (rho ... (rho+order)),
// i.e. 2 Re sum_{gamma > 0}. The modulus x^{order+1/2} is factored out of the sum.
double folded_zero_sum(const ZeroTable& zeros, int order, double x, bool reverse = false) {
  const double log_x = std::log(x);
  CompensatedSum acc;
  auto term = [&](double gamma) {
    const Complex phase{std::cos(gamma * log_x), std::sin(gamma * log_x)};
    return 2.0 * (phase / rising_product(rho_of(gamma), order)).real();
  };
  if (reverse) {
    for (auto it = zeros.ordinates.rbegin(); it != zeros.ordinates.rend(); ++it) acc.add(term(*it));
  } else {
    for (double g : zeros.ordinates) acc.add(term(g));
  }
  return std::pow(x, order + 0.5) * acc.value();
}

}  // namespace

ZeroTable load_zeros(std::istream& in, std::string source) {
  ZeroTable t;
  t.source = std::move(source);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
      throw FormatError(line_no, "not a decimal ordinate: '" + std::string(s) + "'");
    }
    if (v <= 0.0) throw FormatError(line_no, "ordinate must be positive");
    if (v < kFirstOrdinateFloor) throw FormatError(line_no, "ordinate below the first zeta zero");
    if (!t.ordinates.empty() && v <= t.ordinates.back()) {
      throw FormatError(line_no, "ordinates must be strictly ascending");
    }
    t.ordinates.push_back(v);
  }
  if (t.ordinates.empty()) throw FormatError(0, "zero table '" + t.source + "' contains no ordinates");
  return t;
}

ZeroTable load_zeros_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open zero file '" + path.string() + "'");
  return load_zeros(in, path.string());
}

ZeroSum hk_zero_sum(const ZeroTable& zeros, int k, double X, SumOrder order) {
  if (k < 2) throw std::invalid_argument("hk_zero_sum: k must be >= 2");
  if (!(X >= k)) throw std::invalid_argument("hk_zero_sum: X must be >= k");
  if (zeros.empty()) throw std::invalid_argument("hk_zero_sum: empty zero table");

  const double value = -k * folded_zero_sum(zeros, k - 1, X, order == SumOrder::descending);
  const double bound = hk_abs_bound(zeros, k, X);
  if (std::abs(value) > bound * (1.0 + 1e-12)) throw std::logic_error("hk_zero_sum: value exceeds its absolute bound");

  const double T = zeros.ordinates.back();
  const double km1 = k - 1.0;
  const double tail =
      (std::log(T / kTwoPi) / (km1 * std::pow(T, km1)) + 1.0 / (km1 * km1 * std::pow(T, km1))) / kTwoPi;
  return {value, 2.0 * k * std::pow(X, k - 0.5) * tail};
}

double hk_abs_bound(const ZeroTable& zeros, int k, double X) {
  CompensatedSum acc;
  for (double g : zeros.ordinates) acc.add(1.0 / std::abs(rising_product(rho_of(g), k - 1)));
  return 2.0 * k * std::pow(X, k - 0.5) * acc.value();
}

Complex granville_rk(int k, double gamma) {
  if (k < 2) throw std::invalid_argument("granville_rk: k must be >= 2");
  return -static_cast<double>(k) / rising_product(rho_of(gamma), k - 2);
}

std::pair<Complex, Complex> rk_hk_consistency(int k, double gamma, double X) {
  if (k < 2) throw std::invalid_argument("rk_hk_consistency: k must be >= 2");
  const Complex rho = rho_of(gamma);
  const double log_x = std::log(X);
  // X^{rho+k-1} = X^{k-1/2} e^{i gamma log X}
  const Complex power = std::pow(X, k - 0.5) * Complex{std::cos(gamma * log_x), std::sin(gamma * log_x)};
  const Complex lhs = granville_rk(k, gamma) * power / (rho + static_cast<double>(k - 1));
  const Complex rhs = -static_cast<double>(k) * power / rising_product(rho, k - 1);
  return {lhs, rhs};
}

ExplicitCheck psi1_explicit(const ZeroTable& zeros, const MangoldtTable& table, double x) {
  if (!(x >= 2.0)) throw std::invalid_argument("psi1_explicit: x must be >= 2");
  const double zero_part = zeros.empty() ? 0.0 : folded_zero_sum(zeros, 1, x);
  const double formula = 0.5 * x * x - zero_part - kLogDerivZetaAt0 * x + kLogDerivZetaAtMinus1;
  return {formula, riesz_psi_j(table, {1, x})};
}

ExplicitCheck psij_explicit(const ZeroTable& zeros, const MangoldtTable& table, int j, double x) {
  if (j < 1) throw std::invalid_argument("psij_explicit: j must be >= 1");
  if (!(x >= 2.0)) throw std::invalid_argument("psij_explicit: x must be >= 2");
  const double zero_part = zeros.empty() ? 0.0 : folded_zero_sum(zeros, j, x);
  const double formula = std::pow(x, j + 1) / factorial(j + 1) - zero_part;
  return {formula, riesz_psi_j(table, {j, x})};
}

double ResidualReport::max_normalized() const {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.normalized);
  return m;
}

ResidualReport residual_report(const PrefixSums& s, const ZeroTable& zeros, std::span<const double> grid,
                               double eps) {
  ResidualReport rep{s.k, eps, zeros.size(), {}};
  rep.rows.reserve(grid.size());
  for (double X : grid) {
    if (X < s.k || X > static_cast<double>(s.limit)) {
      throw std::out_of_range("residual_report: grid point " + format_real(X) + " outside [k, limit]");
    }
    ResidualRow row;
    row.X = X;
    row.S = s[static_cast<std::int64_t>(std::floor(X))];
    row.main = std::pow(X, s.k) / factorial(s.k);
    const ZeroSum h = hk_zero_sum(zeros, s.k, X);
    row.H = h.value;
    row.truncation_estimate = h.truncation_estimate;
    row.residual = row.S - row.main - row.H;
    const double log_x = std::log(X);
    row.normalized = std::fabs(row.residual) / (std::pow(X, s.k - 1) * log_x * log_x * log_x);
    row.normalized_eps = std::fabs(row.residual) / std::pow(X, s.k - 0.5 + eps);
    rep.rows.push_back(row);
  }
  return rep;
}

std::vector<double> geometric_grid(double start, double stop, double ratio) {
  if (!(start > 0.0)) throw std::invalid_argument("geometric grid: start must be > 0");
  if (!(stop >= start)) throw std::invalid_argument("geometric grid: stop must be >= start");
  if (!(ratio > 1.0)) throw std::invalid_argument("geometric grid: ratio must be > 1");
  std::vector<double> out;
  for (double x = start; x <= stop * (1.0 + 1e-9); x *= ratio) out.push_back(std::fmin(x, stop));
  return out;
}

}  // namespace gbk
