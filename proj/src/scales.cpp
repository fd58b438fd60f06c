#include "slicq/scales.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace slicq {

namespace scales {

double hz_to_bark(double hz) {
  const double r = hz / 7500.0;
  return 13.0 * std::atan(0.00076 * hz) + 3.5 * std::atan(r * r);
}

double bark_to_hz(double bark) {
  if (bark <= 0.0) return 0.0;
  // hz_to_bark is strictly increasing; bracket then bisect to 1e-10 Hz.
  double lo = 0.0;
  double hi = 1000.0;
  while (hz_to_bark(hi) < bark) {
    hi *= 2.0;
    if (hi > 1e12) throw DomainError("bark_to_hz: value out of range");
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (hz_to_bark(mid) < bark)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

}  // namespace scales

ScaleKind parse_scale_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "bark") return ScaleKind::Bark;
  if (lower == "cqlog") return ScaleKind::LogCQ;
  if (lower == "mel") return ScaleKind::Mel;
  if (lower == "linear") return ScaleKind::Linear;
  throw DomainError("unknown scale kind: '" + std::string(name) +
                    "' (expected bark, cqlog, mel or linear)");
}

std::string to_string(ScaleKind kind) {
  switch (kind) {
    case ScaleKind::Bark:
      return "bark";
    case ScaleKind::LogCQ:
      return "cqlog";
    case ScaleKind::Mel:
      return "mel";
    case ScaleKind::Linear:
      return "linear";
  }
  return "?";
}

FrequencyScale::FrequencyScale(ScaleKind kind, double fmin_hz, double fmax_hz,
                               int bins)
    : kind_(kind), fmin_(fmin_hz), fmax_(fmax_hz), bins_(bins) {
  if (!(fmin_hz > 0.0))
    throw DomainError("FrequencyScale: fmin must be positive");
  if (!(fmin_hz < fmax_hz))
    throw DomainError("FrequencyScale: fmin must be below fmax");
  if (bins < 2) throw DomainError("FrequencyScale: need at least 2 bins");

  centers_.resize(static_cast<size_t>(bins));
  const double s0 = to_scale(fmin_hz);
  const double s1 = to_scale(fmax_hz);
  for (int k = 0; k < bins; ++k) {
    if (kind_ == ScaleKind::Linear) {
      centers_[k] = fmin_hz + (fmax_hz - fmin_hz) *
                                  (static_cast<double>(k) / (bins - 1));
    } else {
      const double s = s0 + (s1 - s0) * (static_cast<double>(k) / (bins - 1));
      centers_[k] = to_hz(s);
    }
  }
  // Pin the endpoints exactly; the inverse maps only promise 1e-10 Hz.
  centers_.front() = fmin_hz;
  centers_.back() = fmax_hz;

  for (int k = 1; k < bins; ++k) {
    if (!(centers_[k] > centers_[k - 1]))
      throw DomainError(
          "FrequencyScale: bins too dense, center frequencies not strictly "
          "increasing");
  }
}

double FrequencyScale::to_scale(double hz) const {
  switch (kind_) {
    case ScaleKind::Bark:
      return scales::hz_to_bark(hz);
    case ScaleKind::LogCQ:
      return std::log2(hz);
    case ScaleKind::Mel:
      return scales::hz_to_mel(hz);
    case ScaleKind::Linear:
      return hz;
  }
  return hz;
}

double FrequencyScale::to_hz(double scale_value) const {
  switch (kind_) {
    case ScaleKind::Bark:
      return scales::bark_to_hz(scale_value);
    case ScaleKind::LogCQ:
      return std::exp2(scale_value);
    case ScaleKind::Mel:
      return scales::mel_to_hz(scale_value);
    case ScaleKind::Linear:
      return scale_value;
  }
  return scale_value;
}

std::vector<double> FrequencyScale::bandwidths() const {
  std::vector<double> bw(centers_.size());
  const size_t n = centers_.size();
  for (size_t k = 0; k < n; ++k) {
    if (k == 0)
      bw[k] = centers_[1] - centers_[0];
    else if (k == n - 1)
      bw[k] = centers_[n - 1] - centers_[n - 2];
    else
      bw[k] = 0.5 * (centers_[k + 1] - centers_[k - 1]);
  }
  return bw;
}

std::string FrequencyScale::describe() const {
  std::ostringstream os;
  os << to_string(kind_) << "/" << bins_ << "/" << fmin_ << "-" << fmax_;
  return os.str();
}

}  // namespace slicq
