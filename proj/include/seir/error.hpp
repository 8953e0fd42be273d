#pragma once

#include <stdexcept>
#include <string>

namespace seir {

/// Base class for every error raised by the workbench library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration: bad hyperparameters, mismatched hashes, unknown names.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Invalid or missing input data.
class DataError : public Error {
  public:
    using Error::Error;
};

/// A source file could not be scanned (binary content, invalid UTF-8).
class ExtractionError : public DataError {
  public:
    ExtractionError(std::string origin, const std::string& what);

    const std::string& origin() const noexcept { return m_origin; }

  private:
    std::string m_origin;
};

}  // namespace seir
