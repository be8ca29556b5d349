#pragma once

#include <stdexcept>
#include <string>

namespace hv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by exact zero") {}
};

struct SingularMatrix : Error {
  using Error::Error;
  SingularMatrix() : Error("matrix is singular") {}
};

struct NonRationalRootsRemain : Error {
  using Error::Error;
  NonRationalRootsRemain() : Error("residual factor of degree >= 1 has no rational roots") {}
};

struct ZeroVector : Error {
  ZeroVector() : Error("operation requires a nonzero vector") {}
};

struct DegenerateParams : Error {
  using Error::Error;
};

struct InvalidHBarModule : Error {
  using Error::Error;
};

struct SingularSystem : Error {
  using Error::Error;
  SingularSystem() : Error("extraction system is singular or inconsistent with the data") {}
};

struct RecurrenceNotFound : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t pos;
  std::string expected;
  ParseError(std::size_t at, std::string what_expected)
      : Error("parse error at position " + std::to_string(at) + ": expected " + what_expected),
        pos(at),
        expected(std::move(what_expected)) {}
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace hv
