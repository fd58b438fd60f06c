#ifndef SLICQ_STFT_HPP
#define SLICQ_STFT_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace slicq {

// Periodic-Hann STFT, defaulting to the 4096/1024 analysis configuration.
struct StftParams {
  int window_length = 4096;
  int hop = 1024;

  void validate() const;
  int rows() const { return window_length / 2 + 1; }
  std::string describe() const;
};

// Complex matrix [freq-bin x frame], frame-major storage.
struct StftSpectrum {
  int rows = 0;
  int frames = 0;
  long original_length = 0;
  std::vector<std::complex<double>> data;

  std::complex<double>& at(int bin, int frame) {
    return data[static_cast<size_t>(frame) * rows + bin];
  }
  const std::complex<double>& at(int bin, int frame) const {
    return data[static_cast<size_t>(frame) * rows + bin];
  }
};

// Periodic Hann window of length n.
std::vector<double> hann_window(int n);

StftSpectrum stft_forward(const StftParams& params,
                          std::span<const double> signal);
// Least-squares weighted overlap-add; exact inverse away from the first
// and last window_length samples, trimmed to original_length.
std::vector<double> stft_inverse(const StftParams& params,
                                 const StftSpectrum& spec);

// Per-sample overlap-add weight (sum of shifted squared windows) over the
// padded extent of a spectrum with the given frame count.
std::vector<double> stft_ola_denominator(const StftParams& params, int frames);

}  // namespace slicq

#endif  // SLICQ_STFT_HPP
