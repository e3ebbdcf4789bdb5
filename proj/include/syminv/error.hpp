#pragma once

#include <stdexcept>
#include <string>

namespace syminv {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SingularError : Error { using Error::Error; };
struct NotSkewError : Error { using Error::Error; };
struct OddDimensionError : Error { using Error::Error; };
struct NotSymmetricError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct ShapeMismatchError : Error { using Error::Error; };
struct DegenerateFormError : Error { using Error::Error; };
struct ModeMismatchError : Error { using Error::Error; };
struct GenerationFailedError : Error { using Error::Error; };
struct DegenerateSymbolError : Error { using Error::Error; };
struct IndexOutOfRangeError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvariantViolationError : Error { using Error::Error; };

}  // namespace syminv
