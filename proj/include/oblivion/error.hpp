#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oblivion {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(Format(message, line, column)), message_(message), line_(line), column_(column) {}

  // The message without the position prefix.
  const std::string& message() const { return message_; }

  // 1-based; line is 0 when the input was a single string.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string Format(const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string where = line > 0 ? "line " + std::to_string(line) + ", " : "";
    return where + "column " + std::to_string(column) + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : Error("unknown atom '" + atom + "'"), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class SignatureError : public Error {
 public:
  using Error::Error;
};

class SignatureMismatchError : public Error {
 public:
  using Error::Error;
};

class OcfError : public Error {
 public:
  enum class Kind { MissingWorld, DuplicateWorld, Unnormalized, NegativeRank };

  OcfError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class InconsistentBeliefsError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace oblivion
