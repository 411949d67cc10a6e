#pragma once

#include <stdexcept>
#include <string>

namespace sfopt {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller handed us an argument or parameter block that violates a
// documented precondition. `field()` names the offending quantity.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// An iterative numeric routine failed to meet its tolerance within its
// budget. Carries the best estimate it had and the error bound at the
// point of giving up, so callers can decide whether the partial answer
// is still usable.
class NumericError : public Error {
 public:
  NumericError(const std::string& message, double estimate, double error_bound)
      : Error(message), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// A quantity was requested for a mode family it is not defined for
// (e.g. the stored intensity profile of a TM mode).
class UnsupportedModeError : public Error {
 public:
  using Error::Error;
};

// Least-squares extraction from synthesized or measured data failed
// (degenerate fit, no usable points above the noise floor, ...).
class FitError : public Error {
 public:
  using Error::Error;
};

// Config file could not be parsed or failed schema validation. Carries
// the 1-based line number (or -1 when not line-specific) and the dotted
// key path of the offending entry when known.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& message, int line = -1, std::string key_path = "")
      : Error(format_message(message, line, key_path)),
        line_(line),
        key_path_(std::move(key_path)) {}

  int line() const noexcept { return line_; }
  const std::string& key_path() const noexcept { return key_path_; }

 private:
  static std::string format_message(const std::string& message, int line,
                                    const std::string& key_path) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!key_path.empty()) out += key_path + ": ";
    out += message;
    return out;
  }

  int line_;
  std::string key_path_;
};

}  // namespace sfopt
