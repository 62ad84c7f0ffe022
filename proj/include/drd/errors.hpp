#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace drd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family descriptor or constructor parameter is out of range.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Arguments are inconsistent with each other or with the graph they refer to.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed graph or labeling text. `position()` is a 1-based line number for
/// line-oriented formats and a 0-based byte offset for graph6.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An instance exceeds a configured solver or enumeration cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A closed-form formula was asked for a case it does not cover.
class ExcludedCase : public Error {
 public:
  using Error::Error;
};

}  // namespace drd
