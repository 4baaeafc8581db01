#ifndef GSPLINE_ERRORS_HPP
#define GSPLINE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gspline {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different rings (different kinds, or polynomial rings
/// with different variables or coefficient rings).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its domain: gcd(0, 0), division by zero,
/// a singular matrix where a nonsingular one is required, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Vector/matrix sizes that do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position),
        detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

}  // namespace gspline

#endif  // GSPLINE_ERRORS_HPP
