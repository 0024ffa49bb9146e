#pragma once

#include <stdexcept>
#include <string>

namespace monolith {

// Base class for all toolkit errors. `code()` is a stable machine-readable
// tag used in CLI error records.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define MONOLITH_ERROR(NAME)                               \
  class NAME : public Error {                              \
   public:                                                 \
    explicit NAME(const std::string& message)              \
        : Error(#NAME, message) {}                         \
  }

MONOLITH_ERROR(NotAssociative);
MONOLITH_ERROR(NoIdentity);
MONOLITH_ERROR(NotLatinSquare);
MONOLITH_ERROR(SizeLimitExceeded);
MONOLITH_ERROR(UnknownFamily);
MONOLITH_ERROR(BadParameter);
MONOLITH_ERROR(NotNormal);
MONOLITH_ERROR(NotAnAtom);
MONOLITH_ERROR(NotSubdirectlyIrreducible);
MONOLITH_ERROR(NotNilpotent);
MONOLITH_ERROR(IdentityInput);
MONOLITH_ERROR(BoundViolation);
MONOLITH_ERROR(MissingParameter);
MONOLITH_ERROR(UnboundVariable);
MONOLITH_ERROR(WrongFreeVariables);
MONOLITH_ERROR(FormulaTooLarge);
MONOLITH_ERROR(BadGroupFile);
MONOLITH_ERROR(BadElement);

#undef MONOLITH_ERROR

// Parse failure with source position and the tokens that would have been
// accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected,
              const std::string& message)
      : Error("SyntaxError", message),
        position_(position),
        expected_(std::move(expected)) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace monolith
