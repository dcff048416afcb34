#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "goldbachkit/goldbach.hpp"
#include "goldbachkit/mangoldt.hpp"

namespace gbk {

// q = product of primes p < y. The exceptional modulus is always 1: no
// Siegel zero exists in any computable range, so no prime is removed from q.
struct OmegaConfig {
  int k = 2;
  double x = 0.0;
  double y = 0.0;  // 0 selects the default max(3, log x)
};

double default_prime_cutoff(double x);

struct Modulus {
  std::uint64_t q = 1;
  std::uint64_t phi = 1;
};

// q and phi(q) for the configured cutoff y (or its default).
Modulus modulus_for(const OmegaConfig& config);
Modulus modulus_of(const FactoredInt& q);
// Largest primorial not exceeding bound (>= 1).
Modulus largest_primorial_at_most(double bound);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

struct ProgressionReport {
  double x = 0.0;
  std::uint64_t q = 1;
  std::uint64_t phi = 1;
  std::vector<std::uint64_t> residues;  // a in [1, q] (a = 0 when q = 1) coprime to q
  std::vector<double> psi_values;       // psi(2x; q, a)
  double bound = 0.0;                   // x / (2 phi(q))
  double min_ratio = 0.0;               // min_a psi(2x; q, a) / bound
  bool modulus_warning = false;         // q >= 2x: classes mostly empty, bound vacuous
};

ProgressionReport progression_bound_check(const MangoldtTable& table, double x, std::uint64_t q);

// Per-residue sums sum_{n <= L, n = b mod q} w[n], b = 0..q-1.
std::vector<double> residue_class_sums(std::span<const double> w, std::int64_t L, std::uint64_t q);

struct ChainLevel {
  int level = 0;
  std::int64_t length = 0;             // L = 2 level x
  std::vector<double> class_sums;      // sum_{n <= L, n = b} G_level(n), b = 0..q-1
  std::vector<double> aggregated;      // sum_{(a,q)=1} psi(2x;q,a) * class_sums_{level-1}(b - a)
  double min_lhs = 0.0;                // min over b coprime to q
  double min_aggregated = 0.0;         // min over b coprime to q
  double rhs = 0.0;                    // x^level / (2^level phi(q))
  // Levels 2..k-1 feed the final q | n step; level k over coprime residues is
  // reported but is not a link of the chain.
  bool in_chain = false;
  double margin() const noexcept { return (min_lhs - rhs) / rhs; }
};

struct ChainReport {
  double x = 0.0;
  std::uint64_t q = 1;
  std::uint64_t phi = 1;
  int k = 2;
  std::vector<ChainLevel> levels;  // level = 2..k
  double final_lhs = 0.0;          // sum_{n <= 2kx, q | n} G_k(n)
  double final_aggregated = 0.0;   // sum_{(a,q)=1} psi(2x;q,a) * class_sums_{k-1}(-a)
  double final_rhs = 0.0;          // x^k / (2^k phi(q))
  double final_margin() const noexcept { return (final_lhs - final_rhs) / final_rhs; }
  // Smallest margin over the chain links (in-chain levels and the final step).
  double chain_margin() const noexcept;
};

// tables maps level l (2..k) to a Goldbach table with limit >= 2 l x.
// Throws std::invalid_argument when a level is missing or too short.
ChainReport chain_check(const MangoldtTable& table, const std::map<int, GoldbachTable>& tables, double x,
                        std::uint64_t q, int k);

struct MaxScan {
  double max_value = 0.0;
  std::int64_t argmax = 0;
  double bound = 0.0;       // x^{k-1} / 2^{k+1} * q / phi(q)
  double loglog_ref = 0.0;  // x^{k-1} log log x
  std::uint64_t q = 1;
  std::uint64_t phi = 1;
  bool fell_back = false;   // requested q exceeded 2x; largest primorial <= 2x used
};

MaxScan max_gk_scan(const GoldbachTable& g, double x, std::uint64_t q);

// (prod_{p < y} (1 - 1/p)^{-1}, e^gamma log y)
std::pair<double, double> mertens_ratio(double y);

}  // namespace gbk
