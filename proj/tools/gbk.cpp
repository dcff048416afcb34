#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldbachkit/circle.hpp"
#include "goldbachkit/combinatorics.hpp"
#include "goldbachkit/errors.hpp"
#include "goldbachkit/goldbach.hpp"
#include "goldbachkit/io.hpp"
#include "goldbachkit/mangoldt.hpp"
#include "goldbachkit/numeric.hpp"
#include "goldbachkit/omega.hpp"
#include "goldbachkit/zeros.hpp"

namespace {

enum Exit { kOk = 0, kValidation = 1, kComputation = 2 };

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void log_line(const char* level, const std::string& op, const std::string& msg) {
  std::cerr << "level=" << level << " op=" << op << " msg=\"" << msg << "\"\n";
}

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  double ratio = 0.0;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  std::istringstream in(text);
  char c1 = 0;
  char c2 = 0;
  if (!(in >> g.start >> c1 >> g.stop >> c2 >> g.ratio) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw ValidationError("grid must be start:stop:ratio, got '" + text + "'");
  }
  return g;
}

// Everything a subcommand needs, checked before any computation starts.
struct RunConfig {
  std::string subcommand;
  std::int64_t limit = 4096;
  int k = 2;
  std::string zero_file;
  std::string grid_text;
  std::string method = "fft";
  double delta = gbk::kDefaultArcDelta;
  double y = 0.0;
  double eps = gbk::kDefaultResidualEps;
  std::vector<double> xs;
  std::uint64_t q = 0;
  std::int64_t nodes = 0;
  std::string json_out;
  long kmax = 25;
  std::int64_t n = 0;
  double cutoff = 1e5;
  std::string out;

  std::optional<GridSpec> grid;

  void validate() {
    if (limit < 2) throw ValidationError("--limit must be >= 2");
    if (subcommand == "gk" || subcommand == "sk" || subcommand == "residual" || subcommand == "omega-scan" ||
        subcommand == "singular-series" || subcommand == "circle-check") {
      if (k < 1 || k > 64) throw ValidationError("--k must lie in [1, 64]");
    }
    if ((subcommand == "residual" || subcommand == "omega-scan") && k < 2) throw ValidationError("--k must be >= 2");
    if (subcommand == "gk" || subcommand == "sk") {
      if (method != "direct" && method != "fft" && (subcommand == "sk" || method != "both")) {
        throw ValidationError("--method must be direct, fft" + std::string(subcommand == "gk" ? " or both" : ""));
      }
    }
    if (subcommand == "residual") {
      if (grid_text.empty()) throw ValidationError("--grid is required");
      grid = parse_grid(grid_text);
      if (!(grid->start >= 2.0)) throw ValidationError("grid start must be >= 2");
      if (!(grid->ratio > 1.0)) throw ValidationError("grid ratio must be > 1");
      if (grid->stop < grid->start) throw ValidationError("grid stop must be >= start");
      if (grid->stop > static_cast<double>(limit)) {
        throw ValidationError("grid stop " + gbk::format_real(grid->stop) + " exceeds sieve limit " + std::to_string(limit));
      }
      if (!(eps > 0.0)) throw ValidationError("--eps must be > 0");
    }
    if (subcommand == "residual" || subcommand == "zeros-info") {
      if (zero_file.empty()) {
        const char* env = std::getenv("GOLDBACHKIT_ZEROS");
        zero_file = env != nullptr && *env != '\0' ? env : GBK_DEFAULT_ZEROS;
      }
      if (!std::filesystem::is_regular_file(zero_file)) throw ValidationError("zero file not found: " + zero_file);
    }
    if (subcommand == "circle-check") {
      if (nodes == 0) nodes = 8 * limit;
      if (nodes < 4 * limit) throw ValidationError("--nodes must be >= 4 * limit");
      if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("--delta must lie in (0, 1)");
      if (8 * limit > (std::int64_t{1} << 30)) throw ValidationError("--limit too large for circle-check");
    }
    if (subcommand == "omega-scan") {
      if (xs.empty()) throw ValidationError("--x is required");
      for (double x : xs) {
        if (!(x >= 3.0)) throw ValidationError("every --x must be >= 3");
      }
      if (y != 0.0 && !(y >= 2.0)) throw ValidationError("--y must be >= 2");
    }
    if (subcommand == "identities" && (kmax < 2 || kmax > 200)) throw ValidationError("--kmax must lie in [2, 200]");
    if (subcommand == "singular-series") {
      if (n < 1) throw ValidationError("--n must be >= 1");
      if (!(cutoff >= 2.0) || cutoff > 1e8) throw ValidationError("--cutoff must lie in [2, 1e8]");
    }
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

gbk::GoldbachTable compute_gk(const gbk::MangoldtTable& table, int k, std::int64_t N, const std::string& method) {
  return method == "direct" ? gbk::gk_direct(table, k, N) : gbk::gk_fft(table, k, N);
}

void run_sieve(const RunConfig& c, std::ostream& os) {
  const auto table = gbk::build_mangoldt(c.limit);
  os << "# Lambda(n) natural-log weights; psi(n) = sum_{m<=n} Lambda(m)\n";
  os << "n,Lambda,psi\n";
  gbk::CompensatedSum psi;
  for (std::int64_t n = 1; n <= c.limit; ++n) {
    psi.add(table[n]);
    os << n << ',' << gbk::format_real(table[n]) << ',' << gbk::format_real(psi.value()) << '\n';
  }
}

void run_gk(const RunConfig& c, std::ostream& os) {
  const auto table = gbk::build_mangoldt(c.limit);
  if (c.method != "both") {
    gbk::write_goldbach_table(os, compute_gk(table, c.k, c.limit, c.method));
    return;
  }
  const auto direct = gbk::gk_direct(table, c.k, c.limit);
  const auto fft = gbk::gk_fft(table, c.k, c.limit);
  gbk::write_goldbach_table(os, direct);
  gbk::write_goldbach_table(os, fft);
  double worst = 0.0;
  std::int64_t at = 0;
  for (std::int64_t n = 0; n <= c.limit; ++n) {
    const double d = gbk::discrepancy(fft[n], direct[n]);
    if (d > worst) {
      worst = d;
      at = n;
    }
  }
  os << "# max_discrepancy=" << gbk::format_real(worst) << " at n=" << at << " (|fft-direct|/max(|direct|,1e-12))\n";
}

void run_sk(const RunConfig& c, std::ostream& os) {
  const auto table = gbk::build_mangoldt(c.limit);
  gbk::write_prefix_sums(os, gbk::sk_prefix(compute_gk(table, c.k, c.limit, c.method)));
}

void run_residual(const RunConfig& c, std::ostream& os) {
  const auto zeros = gbk::load_zeros_file(c.zero_file);
  log_line("info", "residual", "loaded " + std::to_string(zeros.size()) + " zeros from " + zeros.source);
  const auto grid = gbk::geometric_grid(c.grid->start, c.grid->stop, c.grid->ratio);
  const auto table = gbk::build_mangoldt(c.limit);
  const auto sums = gbk::sk_prefix(gbk::gk_fft(table, c.k, c.limit));
  gbk::write_residual_report(os, gbk::residual_report(sums, zeros, grid, c.eps));
}

void run_zeros_info(const RunConfig& c, std::ostream& os) {
  const auto zeros = gbk::load_zeros_file(c.zero_file);
  gbk::CompensatedSum inv_sq;
  for (double g : zeros.ordinates) inv_sq.add(1.0 / (g * g));
  nlohmann::ordered_json j;
  j["source"] = zeros.source;
  j["count"] = zeros.size();
  j["first"] = zeros.ordinates.front();
  j["last"] = zeros.ordinates.back();
  j["sum_inverse_gamma_squared"] = inv_sq.value();
  auto bracket = nlohmann::ordered_json::array();
  const std::size_t checked = std::min<std::size_t>(2, zeros.size());
  for (std::size_t i = 0; i < checked; ++i) {
    const double g = zeros.ordinates[i];
    const double found = gbk::bracket_zero(g - 0.05, g + 0.05);
    bracket.push_back({{"index", i + 1}, {"table", g}, {"bracketed", found}, {"abs_difference", std::abs(found - g)}});
  }
  j["sign_change_check"] = bracket;
  os << j.dump(2) << '\n';
}

void run_circle_check(const RunConfig& c, std::ostream& os) {
  const auto table = gbk::build_mangoldt(8 * c.limit);
  const gbk::CircleGrid grid(c.limit, c.nodes);
  gbk::write_arc_sweep(os, gbk::arc_sweep(table, grid, c.k, c.delta));
  if (c.json_out.empty()) return;

  const auto arcs = gbk::arc_classify(grid, c.k, c.delta);
  const auto cauchy = gbk::cauchy_psi_recovery(table, c.limit, c.nodes);
  const auto l2 = gbk::minor_arc_l2(table, c.limit);
  const auto lemma = gbk::lemma1_check(c.k, c.limit, 0.0);
  nlohmann::ordered_json j;
  j["N"] = c.limit;
  j["nodes"] = c.nodes;
  j["k"] = c.k;
  j["delta"] = c.delta;
  j["major_arc_fraction"] = {{"observed", arcs.major_measure},
                             {"exact", gbk::major_arc_measure_exact(c.limit, c.k, c.delta)}};
  j["cauchy_recovery"] = {{"quadrature", cauchy.quadrature},
                          {"psi", cauchy.coefficient},
                          {"relative_error", gbk::rel_error(cauchy.quadrature, cauchy.coefficient)}};
  j["minor_arc_l2"] = {{"power_sum", l2.power_sum}, {"N_log_N", l2.reference}, {"ratio", l2.ratio()}};
  j["lemma1_at_theta0"] = {{"difference_over_scale", lemma.difference / lemma.scale}, {"budget", lemma.budget}};
  std::ofstream js(c.json_out);
  if (!js) throw std::runtime_error("cannot open " + c.json_out);
  js << j.dump(2) << '\n';
}

void run_omega_scan(const RunConfig& c, std::ostream& os) {
  double xmax = 0.0;
  for (double x : c.xs) xmax = std::max(xmax, x);
  const auto table = gbk::build_mangoldt(static_cast<std::int64_t>(2.0 * c.k * xmax) + 1);

  std::ostringstream scans;
  bool first = true;
  for (double x : c.xs) {
    gbk::Modulus mod;
    if (c.q != 0) {
      mod.q = c.q;
    } else {
      mod = gbk::modulus_for({c.k, x, c.y});
    }
    if (static_cast<double>(mod.q) >= 2.0 * x) {
      log_line("warn", "omega-scan", "q=" + std::to_string(mod.q) + " >= 2x; progression bound is vacuous");
    }
    std::map<int, gbk::GoldbachTable> tables;
    for (int level = 2; level <= c.k; ++level) {
      tables.emplace(level, gbk::gk_fft(table, level, static_cast<std::int64_t>(2.0 * level * x)));
    }
    const auto chain = gbk::chain_check(table, tables, x, mod.q, c.k);
    gbk::write_chain_report(os, chain, first);
    const auto scan = gbk::max_gk_scan(tables.at(c.k), x, mod.q);
    if (scan.fell_back) log_line("warn", "omega-scan", "max scan fell back to q=" + std::to_string(scan.q));
    gbk::write_max_scan(scans, x, scan, first);
    first = false;
  }
  os << '\n' << scans.str();
}

void run_identities(const RunConfig& c, std::ostream& os) {
  const auto checks = gbk::identity_suite(c.kmax);
  std::size_t failed = 0;
  os << "identity,k,result,detail\n";
  for (const auto& chk : checks) {
    if (!chk.passed) ++failed;
    os << chk.name << ',' << chk.k << ',' << (chk.passed ? "pass" : "FAIL") << ',' << chk.detail << '\n';
  }
  os << "# " << checks.size() - failed << '/' << checks.size() << " passed\n";
  if (failed != 0) throw std::runtime_error(std::to_string(failed) + " identity checks failed");
}

void run_singular_series(const RunConfig& c, std::ostream& os) {
  const auto v = gbk::singular_series({c.k, c.n, c.cutoff});
  os << "k,n,prime_cutoff,value,tail_bound\n";
  os << c.k << ',' << c.n << ',' << gbk::format_real(c.cutoff) << ',' << gbk::format_real(v.value) << ','
     << gbk::format_real(v.tail_bound) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Goldbach representation counts with k primes"};
  app.require_subcommand(1);

  auto add_out = [&](CLI::App* s) { s->add_option("--out", cfg.out, "Output path (default stdout)"); };
  auto add_limit = [&](CLI::App* s) { s->add_option("--limit", cfg.limit, "Sieve / table limit N"); };
  auto add_k = [&](CLI::App* s) { s->add_option("--k", cfg.k, "Number of summands"); };
  auto add_zeros = [&](CLI::App* s) {
    s->add_option("--zeros", cfg.zero_file, "Zero ordinate file (default $GOLDBACHKIT_ZEROS, then bundled)");
  };

  auto* sieve = app.add_subcommand("sieve", "Von Mangoldt table and psi");
  add_limit(sieve);
  add_out(sieve);

  auto* gk = app.add_subcommand("gk", "G_k(n) table");
  add_k(gk);
  add_limit(gk);
  gk->add_option("--method", cfg.method, "direct|fft|both");
  add_out(gk);

  auto* sk = app.add_subcommand("sk", "Prefix sums S_k(X)");
  add_k(sk);
  add_limit(sk);
  sk->add_option("--method", cfg.method, "direct|fft");
  add_out(sk);

  auto* residual = app.add_subcommand("residual", "S_k - X^k/k! - H_k on a geometric grid");
  add_k(residual);
  add_limit(residual);
  add_zeros(residual);
  residual->add_option("--grid", cfg.grid_text, "start:stop:ratio");
  residual->add_option("--eps", cfg.eps, "Exponent slack for the X^(k-1/2+eps) normalization");
  add_out(residual);

  auto* zinfo = app.add_subcommand("zeros-info", "Summary and sign-change check of a zero file");
  add_zeros(zinfo);
  add_out(zinfo);

  auto* circle = app.add_subcommand("circle-check", "F(z) on |z| = 1 - 1/N with major/minor labels");
  add_limit(circle);
  add_k(circle);
  circle->add_option("--nodes", cfg.nodes, "Number of nodes M (default 8N)");
  circle->add_option("--delta", cfg.delta, "Major-arc exponent");
  circle->add_option("--json", cfg.json_out, "Write diagnostic ratios as JSON here");
  add_out(circle);

  auto* omega = app.add_subcommand("omega-scan", "Progression chain and max G_k scan");
  add_k(omega);
  omega->add_option("--x", cfg.xs, "Scale(s) x")->expected(1, -1);
  omega->add_option("--y", cfg.y, "Prime cutoff for q (default max(3, log x))");
  omega->add_option("--q", cfg.q, "Explicit modulus, overriding --y");
  add_out(omega);

  auto* ids = app.add_subcommand("identities", "Exact combinatorial identity table");
  ids->add_option("--kmax", cfg.kmax, "Largest k");
  add_out(ids);

  auto* ss = app.add_subcommand("singular-series", "Truncated singular series");
  add_k(ss);
  ss->add_option("--n", cfg.n, "Target integer")->required();
  ss->add_option("--cutoff", cfg.cutoff, "Prime cutoff P");
  add_out(ss);

  if (argc > 1 && argv[1][0] != '-') {
    const std::string name = argv[1];
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == name;
    if (!known) {
      log_line("error", "parse", "unknown subcommand '" + name + "'");
      return kValidation;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    log_line("error", "parse", e.what());
    return kValidation;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  const std::string& op = cfg.subcommand;
  try {
    cfg.validate();
  } catch (const ValidationError& e) {
    log_line("error", op, e.what());
    return kValidation;
  }

  try {
    Output out(cfg.out);
    auto& os = out.stream();
    if (op == "sieve") run_sieve(cfg, os);
    else if (op == "gk") run_gk(cfg, os);
    else if (op == "sk") run_sk(cfg, os);
    else if (op == "residual") run_residual(cfg, os);
    else if (op == "zeros-info") run_zeros_info(cfg, os);
    else if (op == "circle-check") run_circle_check(cfg, os);
    else if (op == "omega-scan") run_omega_scan(cfg, os);
    else if (op == "identities") run_identities(cfg, os);
    else if (op == "singular-series") run_singular_series(cfg, os);
    os.flush();
  } catch (const gbk::FormatError& e) {
    log_line("error", op, e.what());
    return kValidation;
  } catch (const std::exception& e) {
    log_line("error", op, e.what());
    return kComputation;
  }
  log_line("info", op, "done");
  return kOk;
}
