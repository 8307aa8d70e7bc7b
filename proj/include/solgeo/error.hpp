#pragma once

#include <stdexcept>
#include <string>

namespace solgeo {

enum class ErrorCode {
  InvalidArgument = 1,
  UnknownName,
  Degenerate,
  Precondition,
};

/// Base of every exception thrown by the library. The C API maps `code()`
/// onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& what) : Error(ErrorCode::UnknownName, what) {}
};

/// The differential of a chart lost rank at the requested point.
class DegeneratePoint : public Error {
 public:
  explicit DegeneratePoint(const std::string& what) : Error(ErrorCode::Degenerate, what) {}
};

class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& what) : Error(ErrorCode::Precondition, what) {}
};

}  // namespace solgeo
