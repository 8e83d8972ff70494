#pragma once

#include <stdexcept>
#include <string>

namespace hybridtext {

// Base for every error the library reports with a user-facing message.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user configuration or unusable input path.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Corpus could not be read or violates its invariants.
class CorpusError : public Error {
 public:
  using Error::Error;
};

// Training produced no usable model.
class TrainingError : public Error {
 public:
  using Error::Error;
};

// Model file is malformed, inconsistent, or has an unknown version.
class ModelFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace hybridtext
