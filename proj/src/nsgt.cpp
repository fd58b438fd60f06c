#include "slicq/nsgt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "slicq/errors.hpp"
#include "slicq/fft.hpp"

namespace slicq {

namespace {

using cd = std::complex<double>;

int next_even_at_least(double x) {
  int n = static_cast<int>(std::ceil(x));
  if (n < 2) n = 2;
  if (n % 2) ++n;
  return n;
}

}  // namespace

NsgtPlan::NsgtPlan(FrequencyScale scale, double sample_rate, int block_length)
    : scale_(std::move(scale)),
      sample_rate_(sample_rate),
      block_length_(block_length) {
  if (!(sample_rate > 0.0)) throw DomainError("NsgtPlan: sample_rate must be positive");
  if (block_length < 16 || block_length % 2 != 0)
    throw DomainError("NsgtPlan: block_length must be even and >= 16");
  const double nyquist = sample_rate / 2.0;
  if (scale_.fmax() > nyquist * (1.0 + 1e-12))
    throw DomainError("NsgtPlan: scale fmax exceeds Nyquist");

  const int half = block_length / 2;
  const double hz_per_sample = sample_rate / block_length;

  // Band centers: DC, the scale bins, Nyquist.
  const std::vector<double>& sc = scale_.center_frequencies();
  const int nbins = scale_.bins();
  std::vector<double> centers(nbins + 2);
  centers[0] = 0.0;
  std::copy(sc.begin(), sc.end(), centers.begin() + 1);
  centers[nbins + 1] = nyquist;

  // Full window widths: each band reaches to its neighbors' centers, the
  // DC and Nyquist bands mirror their single gap. A degenerate Nyquist
  // band (fmax == Nyquist) is clamped to a small minimum support.
  std::vector<double> widths(nbins + 2);
  for (int k = 1; k <= nbins; ++k) widths[k] = centers[k + 1] - centers[k - 1];
  widths[0] = 2.0 * centers[1];
  widths[nbins + 1] = std::max(2.0 * (nyquist - centers[nbins]), 4.0 * hz_per_sample);

  bands_.resize(centers.size());
  for (size_t k = 0; k < centers.size(); ++k) {
    const double pos = centers[k] / hz_per_sample;         // fractional DFT sample
    const double wsamp = widths[k] / hz_per_sample;        // full width in samples
    // Strict interior of (pos - w/2, pos + w/2), clipped to the rfft grid.
    int lo = static_cast<int>(std::floor(pos - wsamp / 2.0)) + 1;
    int hi = static_cast<int>(std::ceil(pos + wsamp / 2.0)) - 1;
    lo = std::max(lo, 0);
    hi = std::min(hi, half);
    const int support = hi - lo + 1;
    if (support < 2)
      throw FrameError("NsgtPlan: block_length " + std::to_string(block_length) +
                       " too short for scale " + scale_.describe() +
                       " (band " + std::to_string(k) + " support < 2 samples)");

    NsgtBand& band = bands_[k];
    band.offset = lo;
    band.center_hz = centers[k];
    band.taper.resize(support);
    for (int j = 0; j < support; ++j) {
      const double x = (lo + j - pos) / wsamp;  // in [-1/2, 1/2]
      band.taper[j] = std::max(0.0, 0.5 * (1.0 + std::cos(2.0 * std::numbers::pi * x)));
    }
    band.time_steps = next_even_at_least(std::max(wsamp, static_cast<double>(support)));
  }

  // Diagonal frame operator on the rfft grid.
  std::vector<double> diag(half + 1, 0.0);
  for (const NsgtBand& band : bands_)
    for (size_t j = 0; j < band.taper.size(); ++j)
      diag[band.offset + j] += band.time_steps * band.taper[j] * band.taper[j];

  const double dmax = *std::max_element(diag.begin(), diag.end());
  for (int n = 0; n <= half; ++n) {
    if (!(diag[n] > dmax * 1e-12))
      throw FrameError("NsgtPlan: frame operator vanishes at " +
                       std::to_string(n * hz_per_sample) +
                       " Hz, spectrum not covered");
  }

  // Canonical duals, scaled so that sum_k w*dual*steps == block_length.
  for (NsgtBand& band : bands_) {
    band.dual.resize(band.taper.size());
    for (size_t j = 0; j < band.taper.size(); ++j)
      band.dual[j] = block_length * band.taper[j] / diag[band.offset + j];
  }
}

std::vector<int> NsgtPlan::time_steps() const {
  std::vector<int> steps(bands_.size());
  for (size_t k = 0; k < bands_.size(); ++k) steps[k] = bands_[k].time_steps;
  return steps;
}

long NsgtPlan::total_coefficients() const {
  long total = 0;
  for (const NsgtBand& band : bands_) total += band.time_steps;
  return total;
}

std::string NsgtPlan::describe() const {
  std::ostringstream os;
  os << "nsgt(" << scale_.describe() << ",fs=" << sample_rate_
     << ",block=" << block_length_ << ")";
  return os.str();
}

NsgtCoefficients forward_nsgt(const NsgtPlan& plan,
                              std::span<const double> signal) {
  const int block = plan.block_length();
  if (static_cast<int>(signal.size()) != block)
    throw ShapeError("forward_nsgt: signal length " +
                     std::to_string(signal.size()) + " != block_length " +
                     std::to_string(block));

  std::vector<cd> spectrum(block / 2 + 1);
  fft::rfft(signal, spectrum);

  NsgtCoefficients coefs;
  coefs.block_length = block;
  coefs.plan_desc = plan.describe();
  coefs.bins.resize(plan.num_bins());

  std::vector<cd> buf;
  for (int k = 0; k < plan.num_bins(); ++k) {
    const NsgtBand& band = plan.bands()[k];
    const int steps = band.time_steps;
    buf.assign(steps, cd{0.0, 0.0});
    // Windowed band slice, aliased onto the bin's own grid. The support
    // never exceeds `steps`, so the placement is injective (painless case).
    for (size_t j = 0; j < band.taper.size(); ++j)
      buf[(band.offset + j) % steps] += spectrum[band.offset + j] * band.taper[j];

    auto& out = coefs.bins[k];
    out.resize(steps);
    fft::ifft(buf, out);
    const double inv = 1.0 / steps;
    for (cd& c : out) c *= inv;
  }
  return coefs;
}

std::vector<double> inverse_nsgt(const NsgtPlan& plan,
                                 const NsgtCoefficients& coefs) {
  const int block = plan.block_length();
  if (static_cast<int>(coefs.bins.size()) != plan.num_bins())
    throw ShapeError("inverse_nsgt: expected " +
                     std::to_string(plan.num_bins()) + " bins, got " +
                     std::to_string(coefs.bins.size()));
  if (coefs.block_length != 0 && coefs.block_length != block)
    throw ShapeError("inverse_nsgt: coefficients were produced for block " +
                     std::to_string(coefs.block_length));

  std::vector<cd> accum(block / 2 + 1, cd{0.0, 0.0});
  std::vector<cd> buf;
  for (int k = 0; k < plan.num_bins(); ++k) {
    const NsgtBand& band = plan.bands()[k];
    const int steps = band.time_steps;
    if (static_cast<int>(coefs.bins[k].size()) != steps)
      throw ShapeError("inverse_nsgt: bin " + std::to_string(k) + " holds " +
                       std::to_string(coefs.bins[k].size()) +
                       " values, plan expects " + std::to_string(steps));

    buf.resize(steps);
    fft::fft(coefs.bins[k], buf);
    const double scale = static_cast<double>(steps) / block;
    for (size_t j = 0; j < band.dual.size(); ++j)
      accum[band.offset + j] += buf[(band.offset + j) % steps] * (band.dual[j] * scale);
  }

  std::vector<double> out(block);
  fft::irfft(accum, out);
  const double inv = 1.0 / block;
  for (double& v : out) v *= inv;
  return out;
}

}  // namespace slicq
