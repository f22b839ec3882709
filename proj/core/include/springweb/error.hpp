#pragma once

#include <stdexcept>
#include <string>

namespace springweb {

/// Base class for every error raised by the library on a well-formed call
/// whose arguments violate a domain precondition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad shape, non-standard tableau, crossing matching, ...
class InvalidInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonRectangularShape : public DomainError {
 public:
  NonRectangularShape(int n, int k)
      : DomainError("shape (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                    ") is not a two column rectangle") {}
};

class NotAShortEdge : public DomainError {
 public:
  explicit NotAShortEdge(int i)
      : DomainError("{" + std::to_string(i) + ", " + std::to_string(i + 1) +
                    "} is not a short edge") {}
};

class DegenerateMatching : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonForestWeb : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularComponent : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace springweb
