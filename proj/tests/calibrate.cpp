// Regenerates the frozen regression constants. Usage: gbk_calibrate <out.json>
#include <cmath>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "goldbachkit/circle.hpp"
#include "goldbachkit/goldbach.hpp"
#include "goldbachkit/mangoldt.hpp"
#include "goldbachkit/zeros.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gbk_calibrate <out.json>\n";
    return 1;
  }
  const auto zeros = gbk::load_zeros_file(GBK_ZERO_FILE);
  const auto table = gbk::build_mangoldt(std::int64_t{1} << 17);

  nlohmann::ordered_json j;
  j["regression_slack"] = 1.05;

  auto residual_max = [&](int k, double stop) {
    const auto sums = gbk::sk_prefix(gbk::gk_fft(table, k, static_cast<std::int64_t>(stop)));
    const auto grid = gbk::geometric_grid(1024.0, stop, 2.0);
    return gbk::residual_report(sums, zeros, grid).max_normalized();
  };
  j["residual_k2_cstar"] = residual_max(2, 131072.0);
  j["residual_k3_cstar"] = residual_max(3, 8192.0);

  auto& psi1 = j["psi1_explicit_over_x"];
  for (double x : {1e2, 1e3, 1e4}) {
    const auto e = gbk::psi1_explicit(zeros, table, x);
    psi1[std::to_string(static_cast<int>(x))] = std::abs(e.formula - e.direct) / x;
  }
  auto& psij = j["psij_explicit_over_xj_at_1000"];
  for (int order : {2, 3}) {
    const auto e = gbk::psij_explicit(zeros, table, order, 1e3);
    psij[std::to_string(order)] = std::abs(e.formula - e.direct) / std::pow(1e3, order);
  }

  const double gy1 = gbk::gy_lemma_diagnostic(table, 256.0, 1.0).ratio();
  const double gy16 = gbk::gy_lemma_diagnostic(table, 256.0, 16.0).ratio();
  j["gy_cstar"] = std::max(gy1, gy16);

  const double l2_128 = gbk::minor_arc_l2(table, 128).ratio();
  const double l2_1024 = gbk::minor_arc_l2(table, 1024).ratio();
  j["minor_arc_band"] = {std::min(l2_128, l2_1024), std::max(l2_128, l2_1024)};

  std::ofstream out(argv[1]);
  out << j.dump(2) << '\n';
  return out ? 0 : 1;
}
