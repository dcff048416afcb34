#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gbk {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

ExactInt binomial(long n, long r);

// f_{k,i} = sum_{j=0}^{k-1} (-1)^j C(k, j) (k - j)^i
ExactInt f_ki(long k, long i);

// f_{k,i} == k (f_{k,i-1} + f_{k-1,i-1}); requires k >= 2, i >= 2.
bool verify_fki_recurrence(long k, long i);

// a_0..a_k with sum_j C(n+j, j) a_j = n^k for n = 0..k, solved in exact
// rational arithmetic. Throws std::logic_error if a solution is not integral
// or a_k != k!.
std::vector<ExactInt> solve_ak(long k);

// (sum_i (-1)^i C(k,i), sum_i (-1)^i C(k,i) (k-i))
std::pair<ExactInt, ExactInt> alternating_sums(long k);

// sum_j (-1)^j j C(k, j)
ExactInt alternating_derivative_sum(long k);

// (C(i-1,i-1) + C(i,i-1) + ... + C(i+m,i-1), C(i+m+1, i))
std::pair<ExactInt, ExactInt> hockey_stick(long i, long m);

struct IdentityCheck {
  std::string name;
  long k = 0;
  bool passed = false;
  std::string detail;
};

// Every exact identity for 2 <= k <= kmax (f_{k,i} vanishing, f_{k,k} = k!,
// the recurrence, a_k = k! and the extended a_j identity, alternating sums,
// the derivative identity, hockey-stick).
std::vector<IdentityCheck> identity_suite(long kmax);

}  // namespace gbk
