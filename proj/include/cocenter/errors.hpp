#pragma once

#include <stdexcept>
#include <string>

namespace cocenter {

// Base of every error raised by the library. The kind decides the CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unsupported group descriptor or malformed configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Text that does not match a grammar production. `production` names it.
class ParseError : public Error {
 public:
  ParseError(std::string production, const std::string& what)
      : Error("parse error in <" + production + ">: " + what), production_(std::move(production)) {}
  const std::string& production() const noexcept { return production_; }

 private:
  std::string production_;
};

// Well-formed input violating an operation's precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured cap (ball length, group order) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A state that contradicts a theorem the computation relies on.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cocenter
