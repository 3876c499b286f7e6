#pragma once

#include <stdexcept>
#include <string>

namespace antopt {

/// Base class for all antopt errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration: bad parameter values, malformed config files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Invalid call arguments: wrong sizes, non-finite inputs, degenerate vectors.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Objective evaluation produced (or was fed) a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Filesystem output failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace antopt
