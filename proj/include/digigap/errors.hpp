#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace digigap {

/// Two operands disagree on ambient dimension or vector length.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A coordinate leaves the safe range |x| <= 2^61.
class CoordinateOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class DuplicateVoxel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The A/B/C/Rest vertex classes of an object overlap, so the object
/// is outside the hypothesis of the 0-gap counting argument.
class ClassificationOverlap : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace digigap
