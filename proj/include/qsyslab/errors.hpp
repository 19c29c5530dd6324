#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsyslab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two wire types (Words) that were required to agree do not.
class WireMismatch : public Error {
public:
  using Error::Error;
};

class NotAProjection : public Error {
public:
  NotAProjection(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

class NotAGroup : public Error {
public:
  NotAGroup(const std::string& law, const std::string& detail)
      : Error("not a group: " + law + " fails (" + detail + ")"), law_(law) {}
  const std::string& law() const noexcept { return law_; }

private:
  std::string law_;
};

class ShapeError : public Error {
public:
  using Error::Error;
};

class GroupMismatch : public Error {
public:
  using Error::Error;
};

class PairMismatch : public Error {
public:
  using Error::Error;
};

class NotAnIntertwiner : public Error {
public:
  NotAnIntertwiner(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

/// A construction's precondition (or a theorem it relies on) failed numerically.
class VerificationFailed : public Error {
public:
  using Error::Error;
};

namespace diagram {

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column,
              std::string token)
      : Error(message + " at " + std::to_string(line) + ":" + std::to_string(column) +
              " (token '" + token + "')"),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

class TypeError : public Error {
public:
  using Error::Error;
};

class UnknownGenerator : public Error {
public:
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator or space '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class SignatureMismatch : public Error {
public:
  using Error::Error;
};

}  // namespace diagram
}  // namespace qsyslab
