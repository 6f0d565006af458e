#pragma once

#include <stdexcept>
#include <string>

namespace overfix {

/// Root of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An error that refers to a source position.
class SourceError : public Error {
 public:
  SourceError(std::string kind, int line, int column, std::string message)
      : Error(kind + " at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        kind_(std::move(kind)),
        line_(line),
        column_(column),
        message_(std::move(message)) {}

  const std::string& kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string kind_;
  int line_;
  int column_;
  std::string message_;
};

class SyntaxError : public SourceError {
 public:
  SyntaxError(int line, int column, std::string message)
      : SourceError("SyntaxError", line, column, std::move(message)) {}
};

class UnsupportedConstruct : public SourceError {
 public:
  UnsupportedConstruct(int line, int column, std::string construct)
      : SourceError("UnsupportedConstruct", line, column, construct), construct_(std::move(construct)) {}
  const std::string& construct() const noexcept { return construct_; }

 private:
  std::string construct_;
};

class TypeError : public SourceError {
 public:
  TypeError(int line, int column, std::string message)
      : SourceError("TypeError", line, column, std::move(message)) {}
};

}  // namespace overfix
