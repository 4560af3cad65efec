#pragma once

#include <exception>
#include <string>

namespace latql {

/// Coarse failure class; maps one-to-one onto CLI exit codes.
enum class ErrorKind {
  Usage = 1,      // syntax, unknown names, bad configuration
  Data = 2,       // integrity of input data
  Internal = 3,   // an invariant check failed
};

class Error : public std::exception {
 public:
  Error(ErrorKind kind, const std::string& what, std::string location = {})
      : kind_(kind), message_(what), location_(std::move(location)) {
    render();
  }

  ErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }
  const std::string& location() const { return location_; }
  const char* what() const noexcept override { return text_.c_str(); }

  /// Sets the location if none is recorded yet; rethrow with `throw;` to keep
  /// the dynamic type.
  void locate(const std::string& location) {
    if (!location_.empty()) return;
    location_ = location;
    render();
  }

 private:
  void render() { text_ = location_.empty() ? message_ : location_ + ": " + message_; }

  ErrorKind kind_;
  std::string message_;
  std::string location_;
  std::string text_;
};

// An index or element does not belong to the structure it is used with.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

class UnknownNameError : public Error {
 public:
  explicit UnknownNameError(const std::string& what, std::string location = {})
      : Error(ErrorKind::Usage, what, std::move(location)) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what, std::string location = {})
      : Error(ErrorKind::Usage, what, std::move(location)) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::string location)
      : Error(ErrorKind::Usage, what, std::move(location)) {}
};

class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& what, std::string location = {})
      : Error(ErrorKind::Data, what, std::move(location)) {}
};

class ScaleCoverageError : public Error {
 public:
  explicit ScaleCoverageError(const std::string& what) : Error(ErrorKind::Data, what) {}
};

class AlignmentError : public Error {
 public:
  explicit AlignmentError(const std::string& what) : Error(ErrorKind::Data, what) {}
};

class ConflictError : public Error {
 public:
  explicit ConflictError(const std::string& what) : Error(ErrorKind::Data, what) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

}  // namespace latql
