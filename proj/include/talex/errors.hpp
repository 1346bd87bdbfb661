#pragma once

#include <stdexcept>
#include <string>

namespace talex {

// Every failure raised by the library carries a machine-readable reason and
// an exit-status class so the CLI can map it without string matching.
enum class ErrorKind {
  Parse = 2,
  Solver = 3,
  Certification = 4,
  Math = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string reason, const std::string& message)
      : std::runtime_error(message), kind_(kind), reason_(std::move(reason)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& reason() const noexcept { return reason_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
  std::string reason_;
};

class ParseError : public Error {
 public:
  ParseError(std::string reason, const std::string& message)
      : Error(ErrorKind::Parse, std::move(reason), message) {}
};

class SolverError : public Error {
 public:
  SolverError(std::string reason, const std::string& message)
      : Error(ErrorKind::Solver, std::move(reason), message) {}
};

class CertificationError : public Error {
 public:
  CertificationError(std::string reason, const std::string& message)
      : Error(ErrorKind::Certification, std::move(reason), message) {}
};

class MathError : public Error {
 public:
  MathError(std::string reason, const std::string& message)
      : Error(ErrorKind::Math, std::move(reason), message) {}
};

}  // namespace talex
