#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uzg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size limit (ring enumeration, invariant vertex cap asked to
// run anyway, ...) was exceeded. CLI maps this to exit code 3.
class LimitError : public Error {
 public:
  explicit LimitError(const std::string& what) : Error(what) {}
};

// Malformed ring spec or input file. Carries the offset of the offending
// character when one is known. CLI maps this to exit code 2.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " +
              what),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : Error("parse error: " + what), position_(0) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// API contract violation: ring axioms fail on a supplied table, a set that is
// not an ideal is passed to a quotient, elements of one ring are mixed into
// another, a partition does not cover the vertex set, and the like. The
// message always names a concrete witness.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(what) {}
};

}  // namespace uzg
