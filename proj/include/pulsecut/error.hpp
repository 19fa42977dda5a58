#pragma once

#include <stdexcept>
#include <string>

namespace pulsecut {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// File missing or unreadable.
class IoError : public Error {
public:
  using Error::Error;
};

// Malformed file contents (WAV layout, CSV syntax, unknown label, ...).
class FormatError : public Error {
public:
  using Error::Error;
};

// Annotation positions not strictly increasing.
class OrderError : public Error {
public:
  using Error::Error;
};

// Invalid argument value.
class ParamError : public Error {
public:
  using Error::Error;
};

// Input degenerate for the requested operation (all-zero spectrogram,
// too few beats, zero noise power, ...).
class DegenerateError : public Error {
public:
  using Error::Error;
};

// Peak detector found no peaks: the recording is unsegmentable.
class EmptyResult : public Error {
public:
  using Error::Error;
};

// No consecutive systole pair qualifies: the recording is unsegmentable.
class NoAnchorError : public Error {
public:
  using Error::Error;
};

// Detected/truth directory stems do not line up.
class PairingError : public Error {
public:
  using Error::Error;
};

// Aggregation over zero reports.
class EmptyCorpus : public Error {
public:
  using Error::Error;
};

// An internal invariant (label alternation, position ordering) would be
// violated. Indicates a bug, not an input condition.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace pulsecut
