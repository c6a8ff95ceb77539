#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pht {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A point set that general position promised to be affinely independent
/// (or non-collinear in projection) turned out not to be.
class DegeneratePosition : public Error {
 public:
  using Error::Error;
};

class ParallelDirections : public Error {
 public:
  using Error::Error;
};

class GeneralPositionViolated : public Error {
 public:
  using Error::Error;
};

/// The oracle answered in a way no complex could produce.
class OracleInconsistency : public Error {
 public:
  using Error::Error;
};

class NegativeCount : public OracleInconsistency {
 public:
  using OracleInconsistency::OracleInconsistency;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class GenerationFailure : public Error {
 public:
  using Error::Error;
};

using WarningSink = std::function<void(std::string_view)>;

/// Replaces the process-wide warning sink (default: stderr). Pass an empty
/// function to silence warnings.
void set_warning_sink(WarningSink sink);
void warn(std::string_view message);

}  // namespace pht
