#ifndef SLICQ_SCALES_HPP
#define SLICQ_SCALES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "slicq/errors.hpp"

namespace slicq {

enum class ScaleKind { Bark, LogCQ, Mel, Linear };

// Parses "bark", "cqlog", "mel", "linear" (case-insensitive).
ScaleKind parse_scale_kind(std::string_view name);
std::string to_string(ScaleKind kind);

// A monotone map between Hz and a perceptual/log axis, discretized into
// `bins` center frequencies uniformly spaced on the scale axis between
// scale(fmin) and scale(fmax).
class FrequencyScale {
 public:
  FrequencyScale(ScaleKind kind, double fmin_hz, double fmax_hz, int bins);

  ScaleKind kind() const { return kind_; }
  double fmin() const { return fmin_; }
  double fmax() const { return fmax_; }
  int bins() const { return bins_; }

  // Forward map Hz -> scale units (Bark, octaves, mel, Hz).
  double to_scale(double hz) const;
  // Inverse map scale units -> Hz. Closed form except Bark, which is
  // inverted by bisection to 1e-10 Hz.
  double to_hz(double scale_value) const;

  // Strictly increasing, centers[0] == fmin, centers[bins-1] == fmax.
  const std::vector<double>& center_frequencies() const { return centers_; }

  // One positive bandwidth per bin: interior bin k gets
  // (center[k+1] - center[k-1]) / 2, endpoints mirror their neighbor gap.
  std::vector<double> bandwidths() const;

  std::string describe() const;

 private:
  ScaleKind kind_;
  double fmin_;
  double fmax_;
  int bins_;
  std::vector<double> centers_;
};

// Free-function spelling of the validating constructor.
inline FrequencyScale build_scale(ScaleKind kind, double fmin_hz,
                                  double fmax_hz, int bins) {
  return FrequencyScale(kind, fmin_hz, fmax_hz, bins);
}

namespace scales {
// Raw scale maps, usable without a FrequencyScale instance.
double hz_to_bark(double hz);    // Zwicker-Terhardt form
double bark_to_hz(double bark);  // numeric inverse (bisection)
double hz_to_mel(double hz);     // 2595 * log10(1 + hz/700)
double mel_to_hz(double mel);
}  // namespace scales

}  // namespace slicq

#endif  // SLICQ_SCALES_HPP
