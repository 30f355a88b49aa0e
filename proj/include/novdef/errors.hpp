#pragma once

#include <stdexcept>
#include <string>

namespace novdef {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NOVDEF_ERROR(Name)            \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

// scalar
NOVDEF_ERROR(NotInvertible);
NOVDEF_ERROR(MissingSymbol);
NOVDEF_ERROR(BadScalar);
NOVDEF_ERROR(OrderMismatch);

// algebra
NOVDEF_ERROR(MissingOp);
NOVDEF_ERROR(DimMismatch);
NOVDEF_ERROR(NotDerivation);
NOVDEF_ERROR(NotCommAssoc);
NOVDEF_ERROR(DependentSpan);
NOVDEF_ERROR(NotLie);

// deform
NOVDEF_ERROR(NotCommutativeBase);
NOVDEF_ERROR(NotNovikovPoisson);
NOVDEF_ERROR(NotNovikov);
NOVDEF_ERROR(NotUnit);
NOVDEF_ERROR(NotTPA);

// dim2
NOVDEF_ERROR(PreconditionViolated);
NOVDEF_ERROR(NotAQuantization);
NOVDEF_ERROR(OutOfRange);

// io
NOVDEF_ERROR(IndexOutOfRange);

#undef NOVDEF_ERROR

/// Malformed input document; carries the offending line (1-based, 0 if unknown) and field.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, std::string field = {})
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line),
        field_(std::move(field)) {}
  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

}  // namespace novdef
