#ifndef SLICQ_FFT_HPP
#define SLICQ_FFT_HPP

#include <complex>
#include <span>

namespace slicq::fft {

using cd = std::complex<double>;

// All transforms follow the FFTW convention: unnormalized, forward kernel
// e^{-2*pi*i*n*t/N}. Plans are cached per (kind, size) behind a mutex, so
// concurrent calls are safe.

// Complex forward / backward, out.size() == in.size().
void fft(std::span<const cd> in, std::span<cd> out);
void ifft(std::span<const cd> in, std::span<cd> out);

// Real-input forward: out.size() == in.size()/2 + 1.
void rfft(std::span<const double> in, std::span<cd> out);
// Hermitian-input backward: in.size() == out.size()/2 + 1, unnormalized
// (scale the result by 1/out.size() for an exact inverse of rfft).
void irfft(std::span<const cd> in, std::span<double> out);

}  // namespace slicq::fft

#endif  // SLICQ_FFT_HPP
