#include "fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wplab::detail {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Radix2FFT::Radix2FFT(int n) : n_(n) {
    if (!is_power_of_two(n)) throw std::invalid_argument("Radix2FFT: size must be a power of two");
    while ((1 << log2n_) < n_) ++log2n_;

    twiddle_.resize(n_ / 2);
    const double step = -2.0 * std::numbers::pi / n_;
    for (int j = 0; j < n_ / 2; ++j) twiddle_[j] = std::polar(1.0, step * j);

    bitrev_.resize(n_);
    for (int i = 0; i < n_; ++i) {
        int r = 0;
        for (int b = 0; b < log2n_; ++b) r |= ((i >> b) & 1) << (log2n_ - 1 - b);
        bitrev_[i] = r;
    }
}

void Radix2FFT::forward(std::span<cplx> data) const {
    if (static_cast<int>(data.size()) != n_) throw std::invalid_argument("Radix2FFT: buffer size mismatch");
    cplx* a = data.data();
    for (int i = 0; i < n_; ++i) {
        const int r = bitrev_[i];
        if (r > i) std::swap(a[i], a[r]);
    }
    for (int len = 2; len <= n_; len <<= 1) {
        const int half = len >> 1;
        const int stride = n_ / len;
        for (int base = 0; base < n_; base += len) {
            for (int j = 0; j < half; ++j) {
                const cplx w = twiddle_[j * stride];
                const cplx u = a[base + j];
                const cplx v = a[base + j + half] * w;
                a[base + j] = u + v;
                a[base + j + half] = u - v;
            }
        }
    }
}

void Radix2FFT::inverse_unnormalized(std::span<cplx> data) const {
    for (auto& z : data) z = std::conj(z);
    forward(data);
    for (auto& z : data) z = std::conj(z);
}

}  // namespace wplab::detail
