#pragma once

#include <ostream>
#include <span>

#include "goldbachkit/circle.hpp"
#include "goldbachkit/goldbach.hpp"
#include "goldbachkit/omega.hpp"
#include "goldbachkit/zeros.hpp"

namespace gbk {

// All writers emit reals with 17 significant digits, so the text round-trips
// to the same doubles.

// "# k=<k> N=<N> method=<m>" then "n,value" rows for 0 <= n <= N.
void write_goldbach_table(std::ostream& os, const GoldbachTable& g);
void write_prefix_sums(std::ostream& os, const PrefixSums& s);
void write_residual_report(std::ostream& os, const ResidualReport& report);
void write_arc_sweep(std::ostream& os, std::span<const ArcSample> samples);
// x,q,phi_q,level,min_lhs,rhs,margin; the final q | n row has level "final".
void write_chain_report(std::ostream& os, const ChainReport& report, bool header = true);
void write_max_scan(std::ostream& os, double x, const MaxScan& scan, bool header = true);

}  // namespace gbk
