#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gbk::detail {

// c[n] = sum_{i + j = n} a[i] b[j] for 0 <= n < n_out, by zero-padded real FFTs.
//
// Outputs are produced in dyadic blocks [2^m, 2^{m+1}); each block convolves
// only the input prefixes it depends on. Rounding error in an FFT product
// scales with the norms of its inputs, so blocking keeps the error at output n
// proportional to the data below 2n rather than to the whole array. Without it
// the small leading coefficients of a high-order convolution drown in noise
// from the large trailing ones.
std::vector<double> truncated_convolution(std::span<const double> a, std::span<const double> b,
                                          std::size_t n_out);

// Plain O(n_out * nnz(b)) convolution, ascending compensated accumulation.
std::vector<double> direct_convolution(std::span<const double> a, std::span<const double> b,
                                       std::size_t n_out);

}  // namespace gbk::detail
