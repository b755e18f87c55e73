#ifndef CONECALC_ERROR_HPP
#define CONECALC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conecalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mathematically invalid input: out-of-range parameters, rank mismatches,
/// inhomogeneous classes where homogeneous ones are required. CLI exit 3.
struct DomainError : Error {
  using Error::Error;
};

/// Malformed command lines or expressions. CLI exit 2.
struct UsageError : Error {
  using Error::Error;
};

struct ParseError : UsageError {
  ParseError(const std::string& msg, std::size_t byte_offset)
      : UsageError(msg + " (at byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  std::size_t offset;
};

}  // namespace conecalc

#endif
