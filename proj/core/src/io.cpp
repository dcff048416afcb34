#include "goldbachkit/io.hpp"

#include "goldbachkit/numeric.hpp"

namespace gbk {

void write_goldbach_table(std::ostream& os, const GoldbachTable& g) {
  os << "# k=" << g.k << " N=" << g.limit << " method=" << to_string(g.method) << '\n';
  os << "n,value\n";
  for (std::int64_t n = 0; n <= g.limit; ++n) os << n << ',' << format_real(g[n]) << '\n';
}

void write_prefix_sums(std::ostream& os, const PrefixSums& s) {
  os << "# k=" << s.k << " N=" << s.limit << " S_k(X) = sum_{n<=X} G_k(n), unnormalized\n";
  os << "X,S_k\n";
  for (std::int64_t x = 0; x <= s.limit; ++x) os << x << ',' << format_real(s[x]) << '\n';
}

void write_residual_report(std::ostream& os, const ResidualReport& report) {
  os << "# k=" << report.k << " zeros=" << report.zeros_used << " eps=" << format_real(report.eps)
     << " main=X^k/k! residual=S_k-main-H_k normalized=|residual|/(X^(k-1) log^3 X)"
     << " normalized_eps=|residual|/X^(k-1/2+eps)\n";
  os << "X,S_k,main,H_k,residual,normalized,normalized_eps,truncation_estimate\n";
  for (const auto& r : report.rows) {
    os << format_real(r.X) << ',' << format_real(r.S) << ',' << format_real(r.main) << ',' << format_real(r.H) << ','
       << format_real(r.residual) << ',' << format_real(r.normalized) << ',' << format_real(r.normalized_eps) << ','
       << format_real(r.truncation_estimate) << '\n';
  }
}

void write_arc_sweep(std::ostream& os, std::span<const ArcSample> samples) {
  os << "# theta in turns (z = R e(theta)); re, im, abs of F(z) = sum Lambda(n) z^n\n";
  os << "theta,re,im,abs,arc_class\n";
  for (const auto& s : samples) {
    os << format_real(s.theta) << ',' << format_real(s.value.real()) << ',' << format_real(s.value.imag()) << ','
       << format_real(std::abs(s.value)) << ',' << (s.major ? "major" : "minor") << '\n';
  }
}

void write_chain_report(std::ostream& os, const ChainReport& report, bool header) {
  if (header) {
    os << "# min_lhs = min over b coprime to q of sum_{n<=2 level x, n=b mod q} G_level(n);"
          " rhs = x^level/(2^level phi_q); margin = (min_lhs-rhs)/rhs;"
          " chain links are levels below k and the final q|n row\n";
    os << "x,q,phi_q,level,min_lhs,rhs,margin\n";
  }
  const auto prefix = format_real(report.x) + ',' + std::to_string(report.q) + ',' + std::to_string(report.phi) + ',';
  for (const auto& lv : report.levels) {
    os << prefix << lv.level << ',' << format_real(lv.min_lhs) << ',' << format_real(lv.rhs) << ','
       << format_real(lv.margin()) << '\n';
  }
  os << prefix << "final," << format_real(report.final_lhs) << ',' << format_real(report.final_rhs) << ','
     << format_real(report.final_margin()) << '\n';
}

void write_max_scan(std::ostream& os, double x, const MaxScan& scan, bool header) {
  if (header) {
    os << "# maxG = max_{n<=2kx} G_k(n); bound = x^(k-1)/2^(k+1) q/phi(q); loglog_ref = x^(k-1) log log x\n";
    os << "x,maxG,bound,loglog_ref\n";
  }
  os << format_real(x) << ',' << format_real(scan.max_value) << ',' << format_real(scan.bound) << ','
     << format_real(scan.loglog_ref) << '\n';
}

}  // namespace gbk
