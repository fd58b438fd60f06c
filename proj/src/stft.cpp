#include "slicq/stft.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "slicq/errors.hpp"
#include "slicq/fft.hpp"

namespace slicq {

using cd = std::complex<double>;

void StftParams::validate() const {
  if (window_length < 2 || window_length % 2 != 0)
    throw DomainError("StftParams: window_length must be even and >= 2");
  if (hop < 1 || hop > window_length)
    throw DomainError("StftParams: need 0 < hop <= window_length");
}

std::string StftParams::describe() const {
  std::ostringstream os;
  os << "stft(window=" << window_length << ",hop=" << hop << ")";
  return os.str();
}

std::vector<double> hann_window(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / n));
  return w;
}

StftSpectrum stft_forward(const StftParams& params,
                          std::span<const double> signal) {
  params.validate();
  if (signal.empty()) throw DomainError("stft_forward: empty signal");

  const int win = params.window_length;
  const int hop = params.hop;
  const long n = static_cast<long>(signal.size());
  const long frames =
      n <= win ? 1 : (n - win + hop - 1) / hop + 1;

  StftSpectrum spec;
  spec.rows = params.rows();
  spec.frames = static_cast<int>(frames);
  spec.original_length = n;
  spec.data.resize(static_cast<size_t>(frames) * spec.rows);

  const std::vector<double> window = hann_window(win);
  std::vector<double> frame(win);
  std::vector<cd> bins(spec.rows);
  for (long f = 0; f < frames; ++f) {
    const long base = f * hop;
    for (int t = 0; t < win; ++t) {
      const long g = base + t;
      frame[t] = g < n ? signal[g] * window[t] : 0.0;
    }
    fft::rfft(frame, bins);
    std::copy(bins.begin(), bins.end(),
              spec.data.begin() + static_cast<size_t>(f) * spec.rows);
  }
  return spec;
}

std::vector<double> stft_ola_denominator(const StftParams& params, int frames) {
  const int win = params.window_length;
  const std::vector<double> window = hann_window(win);
  std::vector<double> den(static_cast<size_t>(frames - 1) * params.hop + win, 0.0);
  for (int f = 0; f < frames; ++f) {
    const long base = static_cast<long>(f) * params.hop;
    for (int t = 0; t < win; ++t) den[base + t] += window[t] * window[t];
  }
  return den;
}

std::vector<double> stft_inverse(const StftParams& params,
                                 const StftSpectrum& spec) {
  params.validate();
  if (spec.rows != params.rows())
    throw ShapeError("stft_inverse: spectrum has " + std::to_string(spec.rows) +
                     " rows, window " + std::to_string(params.window_length) +
                     " expects " + std::to_string(params.rows()));
  if (spec.frames < 1) throw ShapeError("stft_inverse: no frames");
  if (spec.data.size() != static_cast<size_t>(spec.frames) * spec.rows)
    throw ShapeError("stft_inverse: data size mismatch");

  const int win = params.window_length;
  const int hop = params.hop;
  const std::vector<double> window = hann_window(win);
  const std::vector<double> den = stft_ola_denominator(params, spec.frames);

  std::vector<double> out(den.size(), 0.0);
  std::vector<cd> bins(spec.rows);
  std::vector<double> frame(win);
  for (int f = 0; f < spec.frames; ++f) {
    std::copy(spec.data.begin() + static_cast<size_t>(f) * spec.rows,
              spec.data.begin() + static_cast<size_t>(f + 1) * spec.rows,
              bins.begin());
    fft::irfft(bins, frame);
    const long base = static_cast<long>(f) * hop;
    for (int t = 0; t < win; ++t) out[base + t] += frame[t] / win * window[t];
  }
  for (size_t t = 0; t < out.size(); ++t)
    out[t] = den[t] > 1e-12 ? out[t] / den[t] : 0.0;

  long keep = spec.original_length;
  if (keep <= 0 || static_cast<size_t>(keep) > out.size())
    keep = static_cast<long>(out.size());
  out.resize(static_cast<size_t>(keep));
  return out;
}

}  // namespace slicq
