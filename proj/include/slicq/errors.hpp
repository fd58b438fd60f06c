#ifndef SLICQ_ERRORS_HPP
#define SLICQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slicq {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid parameter values (fmin <= 0, bins < 2, empty signal, ...).
struct DomainError : Error {
  using Error::Error;
};

// A nonstationary Gabor frame cannot be built for the requested
// scale/block combination (painless condition unmet, spectrum not covered).
struct FrameError : Error {
  using Error::Error;
};

// Mismatched array shapes between producer and consumer.
struct ShapeError : Error {
  using Error::Error;
};

// File system / OS level failures.
struct IoError : Error {
  using Error::Error;
};

// Parseable file with contents we cannot handle (bad WAV encoding, ...).
struct FormatError : Error {
  using Error::Error;
};

// Stem files that do not agree on length / rate / channel count.
struct ConsistencyError : Error {
  using Error::Error;
};

// Dataset roots with no loadable tracks.
struct DatasetError : Error {
  using Error::Error;
};

}  // namespace slicq

#endif  // SLICQ_ERRORS_HPP
