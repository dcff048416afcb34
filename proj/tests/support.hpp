#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace gbk_test {

// Lambda(n) by trial division, independent of the sieve.
inline double lambda_trial(std::int64_t n) {
  if (n < 2) return 0.0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return std::log(static_cast<double>(n));
}

inline std::vector<double> lambda_trial_table(std::int64_t limit) {
  std::vector<double> w(static_cast<std::size_t>(limit) + 1, 0.0);
  for (std::int64_t n = 2; n <= limit; ++n) w[static_cast<std::size_t>(n)] = lambda_trial(n);
  return w;
}

inline bool is_prime_trial(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline const nlohmann::json& calibration() {
  static const nlohmann::json j = [] {
    std::ifstream in(GBK_FIXTURE_FILE);
    if (!in) throw std::runtime_error("missing calibration fixture " GBK_FIXTURE_FILE);
    return nlohmann::json::parse(in);
  }();
  return j;
}

inline double slack() { return calibration().at("regression_slack").get<double>(); }

}  // namespace gbk_test
