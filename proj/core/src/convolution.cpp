#include "convolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>

#include "goldbachkit/numeric.hpp"

namespace gbk::detail {

namespace {

// FFTW's planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

constexpr std::size_t kMaxFftSize = std::size_t{1} << 34;
constexpr std::size_t kFirstBlock = 64;

// Scratch buffers and plans for one transform size. Owned by a single call.
class RealConvolver {
 public:
  explicit RealConvolver(std::size_t size)
      : size_(size),
        bins_(size / 2 + 1),
        x_(fftw_alloc_real(size)),
        y_(fftw_alloc_real(size)),
        fx_(fftw_alloc_complex(bins_)),
        fy_(fftw_alloc_complex(bins_)) {
    if (!x_ || !y_ || !fx_ || !fy_) {
      release();
      throw std::bad_alloc();
    }
    std::lock_guard lock(planner_mutex());
    const int n = static_cast<int>(size_);
    fwd_x_ = fftw_plan_dft_r2c_1d(n, x_, fx_, FFTW_ESTIMATE);
    fwd_y_ = fftw_plan_dft_r2c_1d(n, y_, fy_, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_c2r_1d(n, fx_, x_, FFTW_ESTIMATE);
  }

  RealConvolver(const RealConvolver&) = delete;
  RealConvolver& operator=(const RealConvolver&) = delete;

  ~RealConvolver() { release(); }

  // Linear convolution of a and b (a.size() + b.size() - 1 <= size) into out[lo, hi).
  void run(std::span<const double> a, std::span<const double> b, std::size_t lo, std::size_t hi,
           std::vector<double>& out) {
    std::fill(x_, x_ + size_, 0.0);
    std::fill(y_, y_ + size_, 0.0);
    std::copy(a.begin(), a.end(), x_);
    std::copy(b.begin(), b.end(), y_);
    fftw_execute(fwd_x_);
    fftw_execute(fwd_y_);
    for (std::size_t i = 0; i < bins_; ++i) {
      const double re = fx_[i][0] * fy_[i][0] - fx_[i][1] * fy_[i][1];
      const double im = fx_[i][0] * fy_[i][1] + fx_[i][1] * fy_[i][0];
      fx_[i][0] = re;
      fx_[i][1] = im;
    }
    fftw_execute(inv_);
    const double scale = 1.0 / static_cast<double>(size_);
    for (std::size_t n = lo; n < hi; ++n) out[n] = x_[n] * scale;
  }

 private:
  void release() {
    std::lock_guard lock(planner_mutex());
    if (fwd_x_) fftw_destroy_plan(fwd_x_);
    if (fwd_y_) fftw_destroy_plan(fwd_y_);
    if (inv_) fftw_destroy_plan(inv_);
    fftw_free(x_);
    fftw_free(y_);
    fftw_free(fx_);
    fftw_free(fy_);
    fwd_x_ = fwd_y_ = inv_ = nullptr;
    x_ = y_ = nullptr;
    fx_ = fy_ = nullptr;
  }

  std::size_t size_;
  std::size_t bins_;
  double* x_;
  double* y_;
  fftw_complex* fx_;
  fftw_complex* fy_;
  fftw_plan fwd_x_ = nullptr;
  fftw_plan fwd_y_ = nullptr;
  fftw_plan inv_ = nullptr;
};

}  // namespace

std::vector<double> truncated_convolution(std::span<const double> a, std::span<const double> b,
                                          std::size_t n_out) {
  std::vector<double> out(n_out, 0.0);
  std::size_t lo = 0;
  std::size_t hi = std::min(kFirstBlock, n_out);
  while (lo < n_out) {
    if (hi > kMaxFftSize / 2) throw std::length_error("truncated_convolution: padded size overflow");
    const std::size_t size = std::bit_ceil(2 * hi);
    const auto a_part = a.first(std::min(a.size(), hi));
    const auto b_part = b.first(std::min(b.size(), hi));
    RealConvolver conv(size);
    conv.run(a_part, b_part, lo, hi, out);
    lo = hi;
    hi = std::min(2 * hi, n_out);
  }
  return out;
}

std::vector<double> direct_convolution(std::span<const double> a, std::span<const double> b,
                                       std::size_t n_out) {
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < b.size() && j < n_out; ++j) {
    if (b[j] != 0.0) support.push_back(j);
  }
  std::vector<double> out(n_out, 0.0);
  for (std::size_t n = 0; n < n_out; ++n) {
    CompensatedSum acc;
    for (std::size_t j : support) {
      if (j > n) break;
      const std::size_t i = n - j;
      if (i < a.size()) acc.add(a[i] * b[j]);
    }
    out[n] = acc.value();
  }
  return out;
}

}  // namespace gbk::detail
