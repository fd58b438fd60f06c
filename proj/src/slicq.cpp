#include "slicq/slicq.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>

#include "slicq/errors.hpp"

namespace slicq {

namespace {

using cd = std::complex<double>;

double rise_value(int j, int transition) {
  const double s =
      std::sin(std::numbers::pi / 2.0 * (j + 0.5) / transition);
  return s * s;
}

void append_raw(std::ostream& os, const void* p, size_t n) {
  os.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void read_raw(std::istream& is, void* p, size_t n) {
  is.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
  if (static_cast<size_t>(is.gcount()) != n)
    throw FormatError("ragged container: truncated file");
}

}  // namespace

void SlicqParams::validate() const {
  if (!(sample_rate > 0.0)) throw DomainError("SlicqParams: sample_rate must be positive");
  if (slice_length < 16 || slice_length % 2 != 0)
    throw DomainError("SlicqParams: slice_length must be even and >= 16");
  if (transition_length < 2 || transition_length % 2 != 0)
    throw DomainError("SlicqParams: transition_length must be even and >= 2");
  if (slice_length < 4 * transition_length)
    throw DomainError("SlicqParams: slice_length must be >= 4 * transition_length");
}

NsgtPlan SlicqParams::make_plan() const {
  validate();
  return NsgtPlan(scale, sample_rate, slice_length);
}

std::string SlicqParams::describe() const {
  std::ostringstream os;
  os << "slicq(" << scale.describe() << ",fs=" << sample_rate
     << ",slice=" << slice_length << ",trans=" << transition_length << ")";
  return os.str();
}

int RaggedSpectrogram::total_bins() const {
  int n = 0;
  for (const RaggedGroup& g : groups) n += g.num_bins;
  return n;
}

double RaggedSpectrogram::total_energy() const {
  double e = 0.0;
  for (const RaggedGroup& g : groups)
    for (const cd& c : g.data) e += std::norm(c);
  return e;
}

double slice_taper(const SlicqParams& params, int index, int total, int n) {
  const int hop = params.hop();
  const int transition = params.transition_length;
  const int rise_start = (hop - transition) / 2;
  const int fall_start = rise_start + hop;

  // One-sided boundary slices keep the taper sum at exactly 1 across the
  // whole padded buffer; the complement is computed as 1 - rise so the
  // crossfade is an exact partition even in floating point.
  double left = 1.0;
  if (index > 0) {
    if (n < rise_start)
      left = 0.0;
    else if (n < rise_start + transition)
      left = rise_value(n - rise_start, transition);
  }
  double right = 1.0;
  if (index < total - 1) {
    if (n >= fall_start + transition)
      right = 0.0;
    else if (n >= fall_start)
      right = 1.0 - rise_value(n - fall_start, transition);
  }
  return std::min(left, right);
}

std::vector<std::vector<double>> slice_signal(const SlicqParams& params,
                                              std::span<const double> signal) {
  params.validate();
  if (signal.empty()) throw DomainError("slice_signal: empty signal");

  const int slice_len = params.slice_length;
  const long hop = params.hop();
  const long n = static_cast<long>(signal.size());
  const long padded = hop * ((n + hop - 1) / hop);
  const int total = static_cast<int>(padded / hop);

  std::vector<std::vector<double>> slices(total);
  for (int i = 0; i < total; ++i) {
    auto& slice = slices[i];
    slice.assign(slice_len, 0.0);
    const long base = static_cast<long>(i) * hop;
    for (int t = 0; t < slice_len; ++t) {
      const long g = base + t;
      if (g >= n) continue;
      const double w = slice_taper(params, i, total, t);
      if (w != 0.0) slice[t] = w * signal[g];
    }
  }
  return slices;
}

RaggedSpectrogram forward_slicq(const SlicqParams& params,
                                std::span<const double> signal) {
  const NsgtPlan plan = params.make_plan();
  const auto slices = slice_signal(params, signal);
  const int total = static_cast<int>(slices.size());

  RaggedSpectrogram spec;
  spec.params = params;
  spec.total_slices = total;
  spec.original_length = static_cast<long>(signal.size());

  // Contiguous bins sharing a time resolution form one group.
  const std::vector<int> steps = plan.time_steps();
  int k = 0;
  while (k < plan.num_bins()) {
    int end = k + 1;
    while (end < plan.num_bins() && steps[end] == steps[k]) ++end;
    RaggedGroup group;
    group.first_bin = k;
    group.num_bins = end - k;
    group.time_steps = steps[k];
    group.data.assign(static_cast<size_t>(group.num_bins) * total * steps[k],
                      cd{0.0, 0.0});
    spec.groups.push_back(std::move(group));
    k = end;
  }

  for (int i = 0; i < total; ++i) {
    const NsgtCoefficients coefs = forward_nsgt(plan, slices[i]);
    for (RaggedGroup& group : spec.groups)
      for (int b = 0; b < group.num_bins; ++b) {
        const auto& bin = coefs.bins[group.first_bin + b];
        std::copy(bin.begin(), bin.end(),
                  group.data.begin() +
                      (static_cast<size_t>(b) * total + i) * group.time_steps);
      }
  }
  return spec;
}

std::vector<double> inverse_slicq(const SlicqParams& params,
                                  const RaggedSpectrogram& spec) {
  const NsgtPlan plan = params.make_plan();
  const std::vector<int> steps = plan.time_steps();
  if (spec.total_bins() != plan.num_bins())
    throw ShapeError("inverse_slicq: spectrogram holds " +
                     std::to_string(spec.total_bins()) + " bins, plan has " +
                     std::to_string(plan.num_bins()));
  if (spec.total_slices < 1)
    throw ShapeError("inverse_slicq: no slices");

  int expect_bin = 0;
  for (const RaggedGroup& g : spec.groups) {
    if (g.first_bin != expect_bin)
      throw ShapeError("inverse_slicq: group bin ranges do not partition the bin set");
    for (int b = 0; b < g.num_bins; ++b)
      if (steps[g.first_bin + b] != g.time_steps)
        throw ShapeError("inverse_slicq: group time_steps mismatch at bin " +
                         std::to_string(g.first_bin + b));
    if (g.data.size() !=
        static_cast<size_t>(g.num_bins) * spec.total_slices * g.time_steps)
      throw ShapeError("inverse_slicq: group tensor size mismatch");
    expect_bin += g.num_bins;
  }

  const long hop = params.hop();
  const int total = spec.total_slices;
  std::vector<double> out(static_cast<size_t>(total + 1) * hop, 0.0);

  NsgtCoefficients coefs;
  coefs.block_length = plan.block_length();
  coefs.bins.resize(plan.num_bins());
  for (int k = 0; k < plan.num_bins(); ++k) coefs.bins[k].resize(steps[k]);

  for (int i = 0; i < total; ++i) {
    for (const RaggedGroup& g : spec.groups)
      for (int b = 0; b < g.num_bins; ++b) {
        auto first = g.data.begin() +
                     (static_cast<size_t>(b) * total + i) * g.time_steps;
        std::copy(first, first + g.time_steps, coefs.bins[g.first_bin + b].begin());
      }
    const std::vector<double> block = inverse_nsgt(plan, coefs);
    const long base = static_cast<long>(i) * hop;
    for (int t = 0; t < params.slice_length; ++t) out[base + t] += block[t];
  }

  if (spec.original_length < 0 ||
      static_cast<size_t>(spec.original_length) > out.size())
    throw ShapeError("inverse_slicq: invalid original_length");
  out.resize(static_cast<size_t>(spec.original_length));
  return out;
}

std::vector<ComplexMatrix> overlap_add_groups(const RaggedSpectrogram& spec) {
  std::vector<ComplexMatrix> out;
  out.reserve(spec.groups.size());
  for (const RaggedGroup& g : spec.groups) {
    const int frame_hop = g.time_steps / 2;
    ComplexMatrix m;
    m.rows = g.num_bins;
    m.cols = g.time_steps * (spec.total_slices + 1) / 2;
    m.data.assign(static_cast<size_t>(m.rows) * m.cols, cd{0.0, 0.0});
    for (int b = 0; b < g.num_bins; ++b)
      for (int i = 0; i < spec.total_slices; ++i) {
        const int base = i * frame_hop;
        for (int t = 0; t < g.time_steps; ++t)
          m.at(b, base + t) += g.at(b, i, t, spec.total_slices);
      }
    out.push_back(std::move(m));
  }
  return out;
}

void write_ragged(const std::string& path, const RaggedSpectrogram& spec) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);

  const uint32_t version = 1;
  os.write("RSGC", 4);
  append_raw(os, &version, 4);
  const double fs = spec.params.sample_rate;
  append_raw(os, &fs, 8);
  const uint32_t slice_len = static_cast<uint32_t>(spec.params.slice_length);
  const uint32_t trans_len = static_cast<uint32_t>(spec.params.transition_length);
  append_raw(os, &slice_len, 4);
  append_raw(os, &trans_len, 4);
  const uint32_t kind = static_cast<uint32_t>(spec.params.scale.kind());
  const double fmin = spec.params.scale.fmin();
  const double fmax = spec.params.scale.fmax();
  const uint32_t bins = static_cast<uint32_t>(spec.params.scale.bins());
  append_raw(os, &kind, 4);
  append_raw(os, &fmin, 8);
  append_raw(os, &fmax, 8);
  append_raw(os, &bins, 4);
  const uint32_t slices = static_cast<uint32_t>(spec.total_slices);
  const uint64_t original = static_cast<uint64_t>(spec.original_length);
  const uint32_t ngroups = static_cast<uint32_t>(spec.groups.size());
  append_raw(os, &slices, 4);
  append_raw(os, &original, 8);
  append_raw(os, &ngroups, 4);

  for (const RaggedGroup& g : spec.groups) {
    const uint32_t first = static_cast<uint32_t>(g.first_bin);
    const uint32_t nbins = static_cast<uint32_t>(g.num_bins);
    const uint32_t steps = static_cast<uint32_t>(g.time_steps);
    append_raw(os, &first, 4);
    append_raw(os, &nbins, 4);
    append_raw(os, &steps, 4);
    append_raw(os, g.data.data(), g.data.size() * sizeof(cd));
  }
  if (!os) throw IoError("write failed: " + path);
}

RaggedSpectrogram read_ragged(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path);

  char magic[4];
  read_raw(is, magic, 4);
  if (std::memcmp(magic, "RSGC", 4) != 0)
    throw FormatError("ragged container: bad magic in " + path);
  uint32_t version = 0;
  read_raw(is, &version, 4);
  if (version != 1)
    throw FormatError("ragged container: unsupported version " +
                      std::to_string(version));

  double fs = 0.0, fmin = 0.0, fmax = 0.0;
  uint32_t slice_len = 0, trans_len = 0, kind = 0, bins = 0, slices = 0,
           ngroups = 0;
  uint64_t original = 0;
  read_raw(is, &fs, 8);
  read_raw(is, &slice_len, 4);
  read_raw(is, &trans_len, 4);
  read_raw(is, &kind, 4);
  read_raw(is, &fmin, 8);
  read_raw(is, &fmax, 8);
  read_raw(is, &bins, 4);
  read_raw(is, &slices, 4);
  read_raw(is, &original, 8);
  read_raw(is, &ngroups, 4);
  if (kind > 3) throw FormatError("ragged container: bad scale kind");

  RaggedSpectrogram spec{
      SlicqParams{FrequencyScale(static_cast<ScaleKind>(kind), fmin, fmax,
                                 static_cast<int>(bins)),
                  fs, static_cast<int>(slice_len), static_cast<int>(trans_len)},
      {},
      static_cast<int>(slices),
      static_cast<long>(original)};

  for (uint32_t i = 0; i < ngroups; ++i) {
    RaggedGroup g;
    uint32_t first = 0, nbins = 0, steps = 0;
    read_raw(is, &first, 4);
    read_raw(is, &nbins, 4);
    read_raw(is, &steps, 4);
    g.first_bin = static_cast<int>(first);
    g.num_bins = static_cast<int>(nbins);
    g.time_steps = static_cast<int>(steps);
    const size_t count = static_cast<size_t>(nbins) * slices * steps;
    if (count > (1ULL << 32))
      throw FormatError("ragged container: implausible group size");
    g.data.resize(count);
    read_raw(is, g.data.data(), count * sizeof(cd));
    spec.groups.push_back(std::move(g));
  }
  return spec;
}

}  // namespace slicq
