#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cotrans {

// Root of every exception thrown by the library. kind() is a stable name used
// in machine-readable CLI errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  [[nodiscard]] virtual const char* kind() const noexcept { return "Error"; }
};

#define COTRANS_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                               \
   public:                                                                  \
    using Error::Error;                                                     \
    [[nodiscard]] const char* kind() const noexcept override { return #Name; } \
  }

COTRANS_DEFINE_ERROR(NonSquare);
COTRANS_DEFINE_ERROR(Singular);
COTRANS_DEFINE_ERROR(DimensionMismatch);
COTRANS_DEFINE_ERROR(DivisionByZero);
COTRANS_DEFINE_ERROR(StructuralError);
COTRANS_DEFINE_ERROR(OutOfRange);
COTRANS_DEFINE_ERROR(InvalidInput);
COTRANS_DEFINE_ERROR(TooLarge);
COTRANS_DEFINE_ERROR(NormalizationImpossible);
COTRANS_DEFINE_ERROR(MissingWeight);
COTRANS_DEFINE_ERROR(SingularSystem);
COTRANS_DEFINE_ERROR(CyclicGraph);
COTRANS_DEFINE_ERROR(NotSinkified);
COTRANS_DEFINE_ERROR(NoCompleteMatching);
COTRANS_DEFINE_ERROR(UsageError);

#undef COTRANS_DEFINE_ERROR

// Malformed input file. Line and column are 1-based; column 0 means the
// error concerns the whole line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}

  [[nodiscard]] const char* kind() const noexcept override { return "ParseError"; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace cotrans
