#pragma once

#include <stdexcept>
#include <string>

namespace linedyn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidRange : public Error {
 public:
  using Error::Error;
};

/// An element or index that is not part of the poset / window.
class NotFound : public Error {
 public:
  using Error::Error;
};

class InvalidTail : public Error {
 public:
  using Error::Error;
};

/// Map is not order-preserving, not simplicial, or otherwise malformed.
class InvalidMap : public Error {
 public:
  using Error::Error;
};

class InvalidMultiMap : public Error {
 public:
  using Error::Error;
};

class NotAPartialOrder : public Error {
 public:
  using Error::Error;
};

class SizeGuard : public Error {
 public:
  using Error::Error;
};

/// Off-window behaviour is needed but no tail rule describes it.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class EmptyResult : public Error {
 public:
  using Error::Error;
};

class OutOfWindow : public Error {
 public:
  using Error::Error;
};

class NotVietoris : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised by checked 64-bit arithmetic; callers retry with big integers.
class ArithmeticOverflow : public std::overflow_error {
 public:
  ArithmeticOverflow() : std::overflow_error("64-bit arithmetic overflow") {}
};

}  // namespace linedyn
