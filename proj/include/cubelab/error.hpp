#pragma once

#include <stdexcept>
#include <string>

namespace cubelab {

/// Raised when an argument violates an operation's documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed object lacks a structural property it must have
/// (e.g. a Laplacian whose kernel is not one-dimensional).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OeisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubelab
