#pragma once

// Internal per-axis transform kernels shared by the grid module and the wave
// packet transform (which runs one transform per phase-space slice and wants
// to reuse a single FFT instance across slices).

#include <vector>

#include "wplab/grid.hpp"
#include "fft.hpp"

namespace wplab::detail {

// In-place spatial -> monotone-frequency transform of one field buffer laid
// out on `g` (length g.size()), including the h-per-axis weight.
void forward_in_place(const UniformGrid& g, cplx* data, const Radix2FFT& fft,
                      std::vector<cplx>& scratch);

// Exact inverse of forward_in_place, including the (2pi)^-n dual weight.
void inverse_in_place(const UniformGrid& g, cplx* data, const Radix2FFT& fft,
                      std::vector<cplx>& scratch);

}  // namespace wplab::detail
