#pragma once

#include <complex>
#include <span>

namespace fracwave::fft {

/// In-place unnormalized complex DFT of a power-of-two length sequence.
/// forward:  X_k = sum_j x_j exp(-2 pi i jk/N)
/// backward: x_j = sum_k X_k exp(+2 pi i jk/N)
/// Plans are created once per length and shared; execution is thread-safe.
void forward(std::span<std::complex<double>> data);
void backward(std::span<std::complex<double>> data);

}  // namespace fracwave::fft
