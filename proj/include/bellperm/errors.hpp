#pragma once

#include <stdexcept>
#include <string>

namespace bellperm {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: not a permutation, not subexceedant, bad bounds.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// A subexceedant function whose prefix images are not all intervals [p].
class NotAnRgf : public Error {
public:
  NotAnRgf(std::string const& what, int position)
      : Error(what), position_(position) {}
  /// First prefix length whose image is not an interval.
  int position() const { return position_; }

private:
  int position_;
};

class NotBp2 : public Error {
public:
  using Error::Error;
};

class NotBp1 : public Error {
public:
  using Error::Error;
};

}  // namespace bellperm
