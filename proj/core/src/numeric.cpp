#include "goldbachkit/numeric.hpp"

#include <cstdio>
#include <stdexcept>

namespace gbk {

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial_real(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0.0;
  if (r > n - r) r = n - r;
  // c holds C(n - r + i, i) after step i; exact below 2^53.
  double c = 1.0;
  for (std::int64_t i = 1; i <= r; ++i) {
    c = c * static_cast<double>(n - r + i) / static_cast<double>(i);
  }
  return c;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace gbk
