#ifndef SLICQ_SLICQ_HPP
#define SLICQ_SLICQ_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "slicq/nsgt.hpp"
#include "slicq/scales.hpp"

namespace slicq {

// Parameters of the sliced transform. Signals are cut into
// slice_length-sized slices at 50% overlap, each windowed by a Tukey-style
// taper whose raised-cosine transitions are transition_length samples long.
struct SlicqParams {
  FrequencyScale scale;
  double sample_rate = 44100.0;
  int slice_length = kDefaultSliceLength;
  int transition_length = kDefaultTransitionLength;

  static constexpr int kDefaultSliceLength = 18060;
  static constexpr int kDefaultTransitionLength = 4516;

  void validate() const;
  int hop() const { return slice_length / 2; }
  NsgtPlan make_plan() const;
  std::string describe() const;
};

// One contiguous run of bins sharing a time resolution. data is indexed
// [bin-in-group][slice][frame], row-major.
struct RaggedGroup {
  int first_bin = 0;
  int num_bins = 0;
  int time_steps = 0;
  std::vector<std::complex<double>> data;

  std::complex<double>& at(int bin, int slice, int frame, int total_slices) {
    return data[(static_cast<size_t>(bin) * total_slices + slice) * time_steps + frame];
  }
  const std::complex<double>& at(int bin, int slice, int frame,
                                 int total_slices) const {
    return data[(static_cast<size_t>(bin) * total_slices + slice) * time_steps + frame];
  }
};

// The ragged list of time-frequency matrices: groups ordered by ascending
// frequency, member ranges partitioning the full bin set of the plan.
struct RaggedSpectrogram {
  SlicqParams params;
  std::vector<RaggedGroup> groups;
  int total_slices = 0;
  long original_length = 0;

  int total_bins() const;
  double total_energy() const;
};

// Dense complex matrix, rows = bins, cols = time frames.
struct ComplexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::complex<double>> data;

  std::complex<double>& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  const std::complex<double>& at(int r, int c) const {
    return data[static_cast<size_t>(r) * cols + c];
  }
};

// Tukey-style slice taper: value of slice `index` (of `total`) at local
// sample n. First/last slices are one-sided so the tapers of all slices
// sum to exactly 1 over the whole padded buffer.
double slice_taper(const SlicqParams& params, int index, int total, int n);

// Cuts the (zero-padded) signal into windowed slices. padded length =
// hop * ceil(N / hop); slice count = padded / hop; each slice spans two
// hops, the last one reading one hop of trailing zeros.
std::vector<std::vector<double>> slice_signal(const SlicqParams& params,
                                              std::span<const double> signal);

RaggedSpectrogram forward_slicq(const SlicqParams& params,
                                std::span<const double> signal);
std::vector<double> inverse_slicq(const SlicqParams& params,
                                  const RaggedSpectrogram& spec);

// Flattens each group's per-slice frames into one continuous matrix by
// 50%-overlap summation. Analysis-only: no exact inverse is provided.
std::vector<ComplexMatrix> overlap_add_groups(const RaggedSpectrogram& spec);

// Binary container format for RaggedSpectrogram (layout in docs/formats.md).
void write_ragged(const std::string& path, const RaggedSpectrogram& spec);
RaggedSpectrogram read_ragged(const std::string& path);

}  // namespace slicq

#endif  // SLICQ_SLICQ_HPP
