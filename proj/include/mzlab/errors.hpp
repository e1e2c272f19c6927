#pragma once

#include <stdexcept>
#include <string>

namespace mzlab {

/// Malformed or mismatched input: wrong variable count, bad syntax, a
/// precondition the caller was responsible for.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two values from different ring contexts (characteristic, nvars, order)
/// met in one operation.
class ContextError : public InputError {
 public:
  explicit ContextError(const std::string& what) : InputError(what) {}
};

/// A series element with zero constant term was asked for its inverse.
class NotAUnit : public InputError {
 public:
  explicit NotAUnit(const std::string& what) : InputError(what) {}
};

/// A bounded search (dimension cap, truncation order, iteration bound) ran
/// out before it could decide.
class Inconclusive : public std::runtime_error {
 public:
  explicit Inconclusive(const std::string& what) : std::runtime_error(what) {}
};

/// A computation is well-posed but not expressible over the rationals
/// (for instance eigenvectors living in a cyclotomic extension).
class Unsupported : public std::runtime_error {
 public:
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mzlab
