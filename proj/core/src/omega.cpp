#include "goldbachkit/omega.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "goldbachkit/numeric.hpp"

namespace gbk {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 26;

void check_modulus(std::uint64_t q, const char* op) {
  if (q < 1) throw std::invalid_argument(std::string(op) + ": modulus must be >= 1");
  if (q > kMaxModulus) throw std::invalid_argument(std::string(op) + ": modulus too large for residue tables");
}

bool coprime(std::uint64_t b, std::uint64_t q) { return gcd_u64(b, q) == 1; }

std::uint64_t phi_of(std::uint64_t q) {
  std::uint64_t phi = q;
  std::uint64_t m = q;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    phi = phi / p * (p - 1);
    while (m % p == 0) m /= p;
  }
  if (m > 1) phi = phi / m * (m - 1);
  return phi;
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

double default_prime_cutoff(double x) { return std::max(3.0, std::log(x)); }

Modulus modulus_of(const FactoredInt& q) { return {q.to_u64(), to_u64(euler_phi(q))}; }

Modulus modulus_for(const OmegaConfig& config) {
  const double y = config.y > 0.0 ? config.y : default_prime_cutoff(config.x);
  return modulus_of(primorial(y));
}

Modulus largest_primorial_at_most(double bound) {
  Modulus m;
  for (std::uint64_t p = 2;; ++p) {
    if (phi_of(p) != p - 1) continue;  // not prime
    if (static_cast<double>(m.q) * static_cast<double>(p) > bound) break;
    m.q *= p;
    m.phi *= p - 1;
  }
  return m;
}

std::vector<double> residue_class_sums(std::span<const double> w, std::int64_t L, std::uint64_t q) {
  check_modulus(q, "residue_class_sums");
  if (L < 0 || static_cast<std::size_t>(L) >= w.size()) throw std::out_of_range("residue_class_sums: L beyond table");
  std::vector<CompensatedSum> acc(q);
  for (std::int64_t n = 1; n <= L; ++n) acc[static_cast<std::uint64_t>(n) % q].add(w[static_cast<std::size_t>(n)]);
  std::vector<double> out(q);
  for (std::uint64_t b = 0; b < q; ++b) out[b] = acc[b].value();
  return out;
}

ProgressionReport progression_bound_check(const MangoldtTable& table, double x, std::uint64_t q) {
  check_modulus(q, "progression_bound_check");
  if (2.0 * x > static_cast<double>(table.limit())) throw std::out_of_range("progression_bound_check: 2x exceeds sieve limit");
  ProgressionReport rep;
  rep.x = x;
  rep.q = q;
  rep.phi = phi_of(q);
  rep.bound = x / (2.0 * static_cast<double>(rep.phi));
  rep.modulus_warning = static_cast<double>(q) >= 2.0 * x;
  const auto classes = residue_class_sums(table.values(), static_cast<std::int64_t>(std::floor(2.0 * x)), q);
  rep.min_ratio = std::numeric_limits<double>::infinity();
  for (std::uint64_t b = 0; b < q; ++b) {
    if (!coprime(b, q)) continue;
    rep.residues.push_back(b);
    rep.psi_values.push_back(classes[b]);
    rep.min_ratio = std::min(rep.min_ratio, classes[b] / rep.bound);
  }
  return rep;
}

ChainReport chain_check(const MangoldtTable& table, const std::map<int, GoldbachTable>& tables, double x,
                        std::uint64_t q, int k) {
  check_modulus(q, "chain_check");
  if (k < 2) throw std::invalid_argument("chain_check: k must be >= 2");
  if (2.0 * x > static_cast<double>(table.limit())) throw std::out_of_range("chain_check: 2x exceeds sieve limit");

  ChainReport rep;
  rep.x = x;
  rep.q = q;
  rep.phi = phi_of(q);
  rep.k = k;
  const auto phi = static_cast<double>(rep.phi);

  // Level 1: psi(2x; q, a).
  std::vector<double> psi_classes = residue_class_sums(table.values(), static_cast<std::int64_t>(std::floor(2.0 * x)), q);
  std::vector<double> prev = psi_classes;

  auto aggregate = [&](const std::vector<double>& lower, std::uint64_t b) {
    CompensatedSum acc;
    for (std::uint64_t a = 0; a < q; ++a) {
      if (!coprime(a, q)) continue;
      acc.add(psi_classes[a] * lower[(b + q - a) % q]);
    }
    return acc.value();
  };

  for (int level = 2; level <= k; ++level) {
    const auto it = tables.find(level);
    if (it == tables.end()) throw std::invalid_argument("chain_check: missing G_" + std::to_string(level) + " table");
    const auto length = static_cast<std::int64_t>(std::floor(2.0 * level * x));
    if (it->second.k != level || it->second.limit < length) {
      throw std::invalid_argument("chain_check: G_" + std::to_string(level) + " table must reach " + std::to_string(length));
    }
    ChainLevel lv;
    lv.level = level;
    lv.length = length;
    lv.class_sums = residue_class_sums(it->second.values, length, q);
    lv.aggregated.resize(q);
    for (std::uint64_t b = 0; b < q; ++b) lv.aggregated[b] = aggregate(prev, b);
    lv.min_lhs = std::numeric_limits<double>::infinity();
    lv.min_aggregated = std::numeric_limits<double>::infinity();
    for (std::uint64_t b = 0; b < q; ++b) {
      if (!coprime(b, q)) continue;
      lv.min_lhs = std::min(lv.min_lhs, lv.class_sums[b]);
      lv.min_aggregated = std::min(lv.min_aggregated, lv.aggregated[b]);
    }
    lv.rhs = std::pow(x, level) / (std::pow(2.0, level) * phi);
    lv.in_chain = level < k;
    rep.levels.push_back(lv);
    if (level < k) prev = lv.class_sums;
  }

  // Final step: the classes of G_{k-1} paired with 0 mod q.
  const auto& top = rep.levels.back();
  rep.final_lhs = top.class_sums[0];
  rep.final_aggregated = k == 2 ? aggregate(psi_classes, 0) : aggregate(rep.levels[rep.levels.size() - 2].class_sums, 0);
  rep.final_rhs = std::pow(x, k) / (std::pow(2.0, k) * phi);
  return rep;
}

double ChainReport::chain_margin() const noexcept {
  double m = final_margin();
  for (const auto& lv : levels) {
    if (lv.in_chain) m = std::min(m, lv.margin());
  }
  return m;
}

MaxScan max_gk_scan(const GoldbachTable& g, double x, std::uint64_t q) {
  const int k = g.k;
  const auto length = static_cast<std::int64_t>(std::floor(2.0 * k * x));
  if (g.limit < length) throw std::out_of_range("max_gk_scan: table must reach 2kx");
  if (!(x > std::exp(1.0))) throw std::invalid_argument("max_gk_scan: x must exceed e");
  MaxScan scan;
  if (static_cast<double>(q) > 2.0 * x) {
    const Modulus m = largest_primorial_at_most(2.0 * x);
    scan.q = m.q;
    scan.phi = m.phi;
    scan.fell_back = true;
  } else {
    scan.q = q;
    scan.phi = phi_of(q);
  }
  for (std::int64_t n = 1; n <= length; ++n) {
    if (g[n] > scan.max_value) {
      scan.max_value = g[n];
      scan.argmax = n;
    }
  }
  scan.bound = std::pow(x, k - 1) / std::pow(2.0, k + 1) * static_cast<double>(scan.q) / static_cast<double>(scan.phi);
  scan.loglog_ref = std::pow(x, k - 1) * std::log(std::log(x));
  return scan;
}

std::pair<double, double> mertens_ratio(double y) {
  if (!(y >= 3.0)) throw std::invalid_argument("mertens_ratio: y must be >= 3");
  double prod = 1.0;
  for (std::uint64_t p : primes_below(y)) prod /= 1.0 - 1.0 / static_cast<double>(p);
  return {prod, std::exp(kEulerGamma) * std::log(y)};
}

}  // namespace gbk
