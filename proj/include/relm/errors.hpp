#pragma once

#include <stdexcept>
#include <string>

namespace relm {

// Base class for every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape or size mismatch between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Cholesky breakdown: pivot() is the index of the first non-positive pivot.
class FactorizationError : public Error {
 public:
  FactorizationError(const std::string& msg, int pivot)
      : Error(msg), pivot_(pivot) {}
  int pivot() const noexcept { return pivot_; }

 private:
  int pivot_;
};

// Invalid solver/experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Dataset loading or schema problems.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace relm
