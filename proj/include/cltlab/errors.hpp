#pragma once

#include <stdexcept>
#include <string>

namespace cltlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument: non-prime modulus, bad dimensions, malformed specs.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// A requested element (matrix of given order, subgroup, ...) does not exist.
class NoSuchElement : public Error {
 public:
  explicit NoSuchElement(const std::string& what) : Error(what) {}
};

/// Group or search space exceeds the configured bound.
class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& what) : Error(what) {}
};

}  // namespace cltlab
