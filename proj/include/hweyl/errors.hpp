#pragma once

#include <stdexcept>
#include <string>

namespace hweyl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands were built over different group descriptors.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

/// Vector/matrix dimensions disagree (measure dimension, functional length, matrix size).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An exponent or parameter lies outside its admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A brute-force search or benchmark exceeded its configured ceiling.
class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `path()` names the offending JSON location.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace hweyl
