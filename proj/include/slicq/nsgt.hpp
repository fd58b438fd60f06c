#ifndef SLICQ_NSGT_HPP
#define SLICQ_NSGT_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "slicq/scales.hpp"

namespace slicq {

// One band of the nonstationary Gabor frame, as a frequency-domain window
// on the rfft grid [0, block_length/2] plus its canonical dual.
struct NsgtBand {
  int offset = 0;              // first covered DFT sample
  std::vector<double> taper;   // analysis window values on the support
  std::vector<double> dual;    // synthesis window values on the support
  int time_steps = 0;          // coefficients per block, even, >= support
  double center_hz = 0.0;
};

// Precomputed analysis/synthesis windows and per-bin time resolutions for
// one block length. The frame always carries a DC band below fmin and a
// Nyquist band above fmax, so num_bins() == scale.bins() + 2 and the
// painless reconstruction identity
//     sum_k taper[k][n] * dual[k][n] * time_steps[k] == block_length
// holds at every frequency sample n in [0, block_length/2].
class NsgtPlan {
 public:
  NsgtPlan(FrequencyScale scale, double sample_rate, int block_length);

  const FrequencyScale& scale() const { return scale_; }
  double sample_rate() const { return sample_rate_; }
  int block_length() const { return block_length_; }
  int num_bins() const { return static_cast<int>(bands_.size()); }
  const std::vector<NsgtBand>& bands() const { return bands_; }

  std::vector<int> time_steps() const;
  // sum_k time_steps[k], always >= block_length (redundant frame).
  long total_coefficients() const;

  std::string describe() const;

 private:
  FrequencyScale scale_;
  double sample_rate_;
  int block_length_;
  std::vector<NsgtBand> bands_;
};

// Coefficients for one block: bin k holds time_steps[k] complex values.
struct NsgtCoefficients {
  std::vector<std::vector<std::complex<double>>> bins;
  int block_length = 0;
  std::string plan_desc;
};

NsgtCoefficients forward_nsgt(const NsgtPlan& plan,
                              std::span<const double> signal);
std::vector<double> inverse_nsgt(const NsgtPlan& plan,
                                 const NsgtCoefficients& coefs);

}  // namespace slicq

#endif  // SLICQ_NSGT_HPP
