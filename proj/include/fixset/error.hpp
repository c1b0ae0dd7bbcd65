#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fixset {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised by the codecs. `position` is a byte offset for graph6 and a
// 1-based line number for edge lists.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A size cap was hit. Callers must treat the quantity as unknown.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
      : Error(what), requested_(requested), cap_(cap) {}
  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

// The input does not satisfy the hypothesis of the requested formula.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace fixset
