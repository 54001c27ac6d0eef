#pragma once

#include <complex>
#include <span>

namespace claws::fft {

/// Unnormalized in-place DFTs on contiguous row-major data of `points^dim`
/// values.  Plans are cached per shape; execution is thread-safe.
void forward(std::span<std::complex<double>> data, int dim, int points);
void backward(std::span<std::complex<double>> data, int dim, int points);

}  // namespace claws::fft
