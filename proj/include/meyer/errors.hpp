#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meyer {

// Base class for every error raised by the library. The message names the
// violated precondition; the CLI maps these to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NonSymmetricInput : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct NotSymplectic : Error {
  using Error::Error;
};

struct NotUpperTriangular : Error {
  using Error::Error;
};

struct GenusMismatch : Error {
  using Error::Error;
};

struct GenusDecrease : Error {
  using Error::Error;
};

struct GenusTooSmall : Error {
  using Error::Error;
};

struct NotInHandlebodyGroup : Error {
  using Error::Error;
};

struct NoSolution : Error {
  using Error::Error;
};

// Malformed word input; `offset` is the 0-based byte position of the defect.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset_in)
      : Error(what + " (at offset " + std::to_string(offset_in) + ")"),
        offset(offset_in) {}
  std::size_t offset;
};

// Malformed matrix document (CLI input files).
struct InvalidDocument : Error {
  using Error::Error;
};

}  // namespace meyer
