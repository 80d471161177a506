#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modal {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `pos` is a 0-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

// A token that belongs to no lexical class at all.
class UnknownSymbolError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class ModelFormatError : public Error {
 public:
  using Error::Error;
};

class UnknownWorldError : public Error {
 public:
  using Error::Error;
};

// An enumeration budget was exhausted before a definite verdict was reached.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// A formula set handed to a filtration was not subformula closed.
// Witness: `member` is in the set, `missing` is a subformula of it that is not.
class NotClosedError : public Error {
 public:
  NotClosedError(std::string member, std::string missing)
      : Error("set not subformula closed: " + member + " requires " + missing),
        member_(std::move(member)),
        missing_(std::move(missing)) {}
  const std::string& member() const { return member_; }
  const std::string& missing() const { return missing_; }

 private:
  std::string member_, missing_;
};

class NotEuclideanError : public Error {
 public:
  using Error::Error;
};

class NotFalsifiedError : public Error {
 public:
  using Error::Error;
};

// A proof transformer was fed input it cannot handle (unchecked derivation,
// missing discharge premise, unsupported direction).
class TransformError : public Error {
 public:
  using Error::Error;
};

}  // namespace modal
