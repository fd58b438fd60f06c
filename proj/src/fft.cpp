#include "slicq/fft.hpp"

#include <fftw3.h>

#include <cassert>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>

#include "slicq/errors.hpp"

namespace slicq::fft {

namespace {

enum class Kind { C2CFwd, C2CBwd, R2C, C2R };

// One cached FFTW plan with its own aligned buffers. Execution copies
// through the buffers under the entry lock; FFTW plan creation is not
// thread-safe, execution on the planned arrays is.
struct PlanEntry {
  std::mutex mtx;
  fftw_plan plan = nullptr;
  void* in = nullptr;
  void* out = nullptr;

  ~PlanEntry() {
    if (plan) fftw_destroy_plan(plan);
    if (in) fftw_free(in);
    if (out) fftw_free(out);
  }
};

PlanEntry& get_entry(Kind kind, size_t n) {
  static std::mutex cache_mtx;
  static std::map<std::pair<int, size_t>, std::unique_ptr<PlanEntry>> cache;

  std::lock_guard<std::mutex> lock(cache_mtx);
  auto key = std::make_pair(static_cast<int>(kind), n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  auto entry = std::make_unique<PlanEntry>();
  const size_t nc = n / 2 + 1;
  switch (kind) {
    case Kind::C2CFwd:
    case Kind::C2CBwd: {
      entry->in = fftw_malloc(sizeof(fftw_complex) * n);
      entry->out = fftw_malloc(sizeof(fftw_complex) * n);
      entry->plan = fftw_plan_dft_1d(
          static_cast<int>(n), static_cast<fftw_complex*>(entry->in),
          static_cast<fftw_complex*>(entry->out),
          kind == Kind::C2CFwd ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
      break;
    }
    case Kind::R2C: {
      entry->in = fftw_malloc(sizeof(double) * n);
      entry->out = fftw_malloc(sizeof(fftw_complex) * nc);
      entry->plan = fftw_plan_dft_r2c_1d(
          static_cast<int>(n), static_cast<double*>(entry->in),
          static_cast<fftw_complex*>(entry->out), FFTW_ESTIMATE);
      break;
    }
    case Kind::C2R: {
      entry->in = fftw_malloc(sizeof(fftw_complex) * nc);
      entry->out = fftw_malloc(sizeof(double) * n);
      entry->plan = fftw_plan_dft_c2r_1d(
          static_cast<int>(n), static_cast<fftw_complex*>(entry->in),
          static_cast<double*>(entry->out), FFTW_ESTIMATE);
      break;
    }
  }
  if (!entry->plan) throw Error("fftw plan creation failed");
  auto* raw = entry.get();
  cache.emplace(key, std::move(entry));
  return *raw;
}

}  // namespace

void fft(std::span<const cd> in, std::span<cd> out) {
  assert(in.size() == out.size());
  if (in.empty()) return;
  PlanEntry& e = get_entry(Kind::C2CFwd, in.size());
  std::lock_guard<std::mutex> lock(e.mtx);
  std::memcpy(e.in, in.data(), sizeof(cd) * in.size());
  fftw_execute(e.plan);
  std::memcpy(out.data(), e.out, sizeof(cd) * out.size());
}

void ifft(std::span<const cd> in, std::span<cd> out) {
  assert(in.size() == out.size());
  if (in.empty()) return;
  PlanEntry& e = get_entry(Kind::C2CBwd, in.size());
  std::lock_guard<std::mutex> lock(e.mtx);
  std::memcpy(e.in, in.data(), sizeof(cd) * in.size());
  fftw_execute(e.plan);
  std::memcpy(out.data(), e.out, sizeof(cd) * out.size());
}

void rfft(std::span<const double> in, std::span<cd> out) {
  assert(out.size() == in.size() / 2 + 1);
  if (in.empty()) return;
  PlanEntry& e = get_entry(Kind::R2C, in.size());
  std::lock_guard<std::mutex> lock(e.mtx);
  std::memcpy(e.in, in.data(), sizeof(double) * in.size());
  fftw_execute(e.plan);
  std::memcpy(out.data(), e.out, sizeof(cd) * out.size());
}

void irfft(std::span<const cd> in, std::span<double> out) {
  assert(in.size() == out.size() / 2 + 1);
  if (out.empty()) return;
  PlanEntry& e = get_entry(Kind::C2R, out.size());
  std::lock_guard<std::mutex> lock(e.mtx);
  std::memcpy(e.in, in.data(), sizeof(cd) * in.size());
  fftw_execute(e.plan);
  std::memcpy(out.data(), e.out, sizeof(double) * out.size());
}

}  // namespace slicq::fft
