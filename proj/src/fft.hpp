#pragma once

// Iterative radix-2 complex FFT with cached twiddles and bit-reversal table.
// The grid module guarantees power-of-two sizes, so no other kernel is needed.
// Instances are immutable after construction; transforms on distinct buffers
// may run concurrently against the same instance.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wplab::detail {

using cplx = std::complex<double>;

class Radix2FFT {
  public:
    explicit Radix2FFT(int n);

    int size() const { return n_; }

    // In-place DFT, X_k = sum_j x_j exp(-2 pi i jk / n).
    void forward(std::span<cplx> data) const;
    // In-place unnormalized inverse, x_j = sum_k X_k exp(+2 pi i jk / n).
    void inverse_unnormalized(std::span<cplx> data) const;

  private:
    int n_ = 0;
    int log2n_ = 0;
    std::vector<cplx> twiddle_;    // exp(-2 pi i j / n), j = 0 .. n/2-1
    std::vector<int> bitrev_;
};

bool is_power_of_two(int n);

}  // namespace wplab::detail
