#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhopf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotInvertible : Error {
  using Error::Error;
};

// A derived record failed its own verification; the input algebra is inconsistent.
struct ConsistencyFailure : Error {
  using Error::Error;
};

struct NotInYD : Error {
  using Error::Error;
};

struct NotQT : Error {
  using Error::Error;
};

struct NotTriangular : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

// Loaded data violates a named axiom.
struct ValidationError : Error {
  ValidationError(std::string tag, const std::string& what)
      : Error("validation failed at " + tag + ": " + what), tag(std::move(tag)) {}
  std::string tag;
};

}  // namespace qhopf
