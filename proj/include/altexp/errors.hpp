#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "altexp/types.hpp"

namespace altexp {

/// Base of the library's runtime errors. Precondition violations on scalar
/// arguments use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sample or coefficient set lacks a key the operation requires.
class MissingEntryError : public Error {
 public:
  MissingEntryError(const std::string& what_kind, IndexTriple key);
  IndexTriple key() const { return key_; }

 private:
  IndexTriple key_;
};

/// Operation defined only for odd N = 2M+1.
class ParityError : public Error {
 public:
  explicit ParityError(int N);
};

/// Grid sizes or key sets disagree between inputs.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& message);
};

}  // namespace altexp
