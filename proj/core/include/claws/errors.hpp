#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace claws {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (negative time,
/// s <= 1 for the index calculus, r outside [1, 2], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidSymbolError : public Error {
 public:
  using Error::Error;
};

class InvalidGridError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

/// Raised when the solution develops non-finite values.  `last_valid_time`
/// is the last output time at which every mode was finite.
class BlowUpError : public Error {
 public:
  BlowUpError(const std::string& what, double last_valid_time)
      : Error(what), last_valid_time_(last_valid_time) {}
  double last_valid_time() const noexcept { return last_valid_time_; }

 private:
  double last_valid_time_;
};

class CflError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Configuration rejected by schema or consistency validation.  `fields`
/// names every offending key (dotted path).
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::vector<std::string> fields);
  const std::vector<std::string>& fields() const noexcept { return fields_; }

 private:
  std::vector<std::string> fields_;
};

/// A runtime failure tagged with the experiment stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what);
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace claws
