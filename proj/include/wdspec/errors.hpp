#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wdspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable tag, e.g. "IncompatibleMean".
  virtual const char* kind() const noexcept { return "Error"; }
};

#define WDSPEC_DEFINE_ERROR(Name)                                            \
  class Name : public Error {                                                \
  public:                                                                    \
    using Error::Error;                                                      \
    const char* kind() const noexcept override { return #Name; }             \
  }

WDSPEC_DEFINE_ERROR(GridError);
WDSPEC_DEFINE_ERROR(UnsupportedOrder);
WDSPEC_DEFINE_ERROR(IncompatibleMean);
WDSPEC_DEFINE_ERROR(OutOfRange);
WDSPEC_DEFINE_ERROR(Breakdown);
WDSPEC_DEFINE_ERROR(NonMonotoneFlow);
WDSPEC_DEFINE_ERROR(NoBlowUpObserved);
WDSPEC_DEFINE_ERROR(InvalidData);

// Configuration errors. All derive from ConfigError so callers can map them
// to a single exit status. key() names the offending key when there is one.
class ConfigError : public Error {
public:
  using Error::Error;
  ConfigError(std::string key, const std::string& what)
      : Error("'" + key + "': " + what), key_(std::move(key)) {}
  const char* kind() const noexcept override { return "ConfigError"; }
  const std::string& key() const noexcept { return key_; }

private:
  std::string key_;
};

class ParseError : public ConfigError {
public:
  using ConfigError::ConfigError;
  const char* kind() const noexcept override { return "ParseError"; }
};
class ValidationError : public ConfigError {
public:
  using ConfigError::ConfigError;
  const char* kind() const noexcept override { return "ValidationError"; }
};
class UnknownKey : public ConfigError {
public:
  using ConfigError::ConfigError;
  const char* kind() const noexcept override { return "UnknownKey"; }
};

#undef WDSPEC_DEFINE_ERROR

} // namespace wdspec
