#ifndef GFKIT_ERROR_HPP
#define GFKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gfkit {

// Root of every error raised by the library. The CLI maps these to exit 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// Malformed rational text.
struct ParseError : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// Reciprocal of a series with zero constant term.
struct NotInvertible : Error {
  using Error::Error;
};

// shift_divide dropped a nonzero coefficient.
struct NotDivisible : Error {
  using Error::Error;
};

// Requested work needs more terms than the series carries.
struct TruncationError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

// T_n[f] requested with f^(n+1)(0) = 0.
struct UndefinedRemainder : Error {
  using Error::Error;
};

// A value that must be an integer came out with a nontrivial denominator.
struct IntegralityError : Error {
  using Error::Error;
};

}  // namespace gfkit

#endif  // GFKIT_ERROR_HPP
