#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace trimorph {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A run count, length, matrix entry or closed-form value left 64 bits.
class CountOverflow : public Error {
 public:
  using Error::Error;
};

class NotAPrefix : public Error {
 public:
  using Error::Error;
};

/// The image of `a` contains `b`.
class NotUpperTriangular : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (singular form, p too small, ...).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// The infinite word needs a nonempty tail after the first `b` of h(b).
class OmegaUndefined : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at " + std::to_string(position) + ": " + message),
        position_(position),
        message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

/// Relation search hit a count overflow while composing at `depth`.
class SearchAborted : public Error {
 public:
  SearchAborted(unsigned depth, const std::string& cause)
      : Error("relation search aborted at depth " + std::to_string(depth) + ": " + cause),
        depth_(depth) {}

  unsigned depth() const noexcept { return depth_; }

 private:
  unsigned depth_;
};

}  // namespace trimorph
