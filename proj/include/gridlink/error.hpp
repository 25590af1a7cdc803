#pragma once

#include <stdexcept>
#include <string>

namespace gridlink {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain (n < 1, epsilon <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A chain violates a structural rule: repeated vertex, collinear
/// consecutive edges, or a repeated edge.
class InvalidChainError : public Error {
 public:
  InvalidChainError(std::string what, std::size_t first_edge, std::size_t second_edge)
      : Error(std::move(what)), first_edge_(first_edge), second_edge_(second_edge) {}

  std::size_t first_edge() const noexcept { return first_edge_; }
  std::size_t second_edge() const noexcept { return second_edge_; }

 private:
  std::size_t first_edge_;
  std::size_t second_edge_;
};

/// Edge length whose square is not rational, so it has no c*sqrt(d) form.
class UnsupportedRadicalError : public Error {
 public:
  using Error::Error;
};

/// A construction could not produce a certified chain.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

/// The requested object provably does not exist (e.g. a minimal circuit for n = 3).
class ImpossibleRequest : public Error {
 public:
  using Error::Error;
};

/// The construction exists in principle but no certified pattern ships for it.
class UnimplementedPattern : public Error {
 public:
  using Error::Error;
};

/// A chain does not meet the precondition of a minimality check.
class NotMinimalError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document or number literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gridlink
